#include "fpcat/monoidal.hpp"

#include "fpcat/coherence.hpp"
#include "fpcat/opposite.hpp"

namespace fpcat {

namespace {
using F = FreydCategory;
using Entries = std::vector<std::vector<std::optional<Morphism>>>;
}  // namespace

Object LiftedMonoidal::tensor_objects(const Object& a, const Object& b) const {
  const Category& base = *p_.base;
  const Object& ga = F::generators(a);
  const Object& gb = F::generators(b);
  return f_->object(base.from_direct_sum({p_.rho(ga, gb),
                                          p_.protensor_datum(base.identity(ga), F::relation(b)),
                                          p_.protensor_datum(F::relation(a), base.identity(gb))}));
}

std::vector<Object> LiftedMonoidal::relation_blocks(const Object& a, const Object& b) const {
  const Object& ga = F::generators(a);
  const Object& gb = F::generators(b);
  return {p_.r(ga, gb), p_.g(ga, F::relations(b)), p_.g(F::relations(a), gb)};
}

// Witness: diag( omega_T(alpha, beta), delta_T(alpha, omega_beta), delta_T(omega_alpha, beta) ).
Morphism LiftedMonoidal::tensor_morphisms(const Morphism& f, const Morphism& g) const {
  const Category& base = *p_.base;
  const Morphism& alpha = F::datum(f);
  const Morphism& beta = F::datum(g);
  Morphism witness = base.direct_sum_morphism({p_.protensor_witness(alpha, beta),
                                               p_.protensor_datum(alpha, F::witness(g)),
                                               p_.protensor_datum(F::witness(f), beta)});
  return f_->morphism_preferring(tensor_objects(f.source, g.source), tensor_objects(f.target, g.target),
                                 p_.protensor_datum(alpha, beta), witness);
}

// Relation blocks of 1 (x) A are r_T(g_1,a), g_T(g_1,r_a), g_T(r_1,a); only the
// middle one carries a witness component, delta_LU(r_a).
Morphism LiftedMonoidal::left_unitor(const Object& a) const {
  const Object& ra = F::relations(a);
  Entries e{{std::nullopt}, {p_.left_unitor_datum(ra)}, {std::nullopt}};
  Morphism w = p_.base->block_morphism(relation_blocks(p_.unit, a), {ra}, e);
  return f_->morphism_preferring(tensor_objects(p_.unit, a), a, p_.left_unitor_datum(F::generators(a)), w);
}

Morphism LiftedMonoidal::left_unitor_inverse(const Object& a) const {
  const Object& ra = F::relations(a);
  Entries e{{std::nullopt, p_.left_unitor_inverse_datum(ra), std::nullopt}};
  Morphism w = p_.base->block_morphism({ra}, relation_blocks(p_.unit, a), e);
  return f_->morphism_preferring(a, tensor_objects(p_.unit, a),
                                 p_.left_unitor_inverse_datum(F::generators(a)), w);
}

// Mirror image of the left unitor: A (x) 1 has blocks r_T(a,g_1), g_T(a,r_1),
// g_T(r_a,g_1), and the witness sits in the third block.
Morphism LiftedMonoidal::right_unitor(const Object& a) const {
  const Object& ra = F::relations(a);
  Entries e{{std::nullopt}, {std::nullopt}, {p_.right_unitor_datum(ra)}};
  Morphism w = p_.base->block_morphism(relation_blocks(a, p_.unit), {ra}, e);
  return f_->morphism_preferring(tensor_objects(a, p_.unit), a, p_.right_unitor_datum(F::generators(a)), w);
}

Morphism LiftedMonoidal::right_unitor_inverse(const Object& a) const {
  const Object& ra = F::relations(a);
  Entries e{{std::nullopt, std::nullopt, p_.right_unitor_inverse_datum(ra)}};
  Morphism w = p_.base->block_morphism({ra}, relation_blocks(a, p_.unit), e);
  return f_->morphism_preferring(a, tensor_objects(a, p_.unit),
                                 p_.right_unitor_inverse_datum(F::generators(a)), w);
}

// Source relations  r_T(a,g_bc) | g_T(a, r_BC) | g_T(r_a, g_bc),
// target relations  r_T(g_ab,c) | g_T(g_ab, r_c) | g_T(r_AB, c),
// where r_BC = r_T(b,c) (+) g_T(b,r_c) (+) g_T(r_b,c) and likewise r_AB.
// The middle source block is split along r_BC with delta_T(id_a, pi_k); the
// 2x2 proassociator witness covers the r_T summands and delta_Ass at shifted
// arguments covers the rest.
Morphism LiftedMonoidal::associator(const Object& a, const Object& b, const Object& c) const {
  const Category& base = *p_.base;
  const Object &ga = F::generators(a), &gb = F::generators(b), &gc = F::generators(c);
  const Object &ra = F::relations(a), &rb = F::relations(b), &rc = F::relations(c);
  Object ab = tensor_objects(a, b), bc = tensor_objects(b, c);
  Object gab = F::generators(ab), gbc = F::generators(bc);
  std::vector<Object> ab_blocks = relation_blocks(a, b), bc_blocks = relation_blocks(b, c);
  auto dT = p_.protensor_datum;
  auto dA = p_.associator_datum;
  Morphism id_a = base.identity(ga), id_c = base.identity(gc);

  std::vector<Object> ws{p_.r(ga, gbc), p_.g(ga, p_.r(gb, gc))};
  std::vector<Object> wt{p_.r(gab, gc), p_.g(p_.r(ga, gb), gc)};
  Morphism W = p_.associator_witness(ga, gb, gc);
  auto w = [&](std::size_t i, std::size_t j) {
    return base.compose({base.injection(ws, i), W, base.projection(wt, j)});
  };
  auto split = [&](std::size_t k) { return dT(id_a, base.projection(bc_blocks, k)); };
  auto into = [&](std::size_t k) { return dT(base.injection(ab_blocks, k), id_c); };

  Entries e(3, std::vector<std::optional<Morphism>>(3));
  e[0][0] = w(0, 0);
  e[0][2] = base.compose(w(0, 1), into(0));
  e[1][0] = base.compose(split(0), w(1, 0));
  e[1][2] = base.add(base.compose({split(0), w(1, 1), into(0)}),
                     base.compose({split(2), dA(ga, rb, gc), into(1)}));
  e[1][1] = base.compose(split(1), dA(ga, gb, rc));
  e[2][2] = base.compose(dA(ra, gb, gc), into(2));
  Morphism witness = base.block_morphism(relation_blocks(a, bc), relation_blocks(ab, c), e);
  return f_->morphism_preferring(tensor_objects(a, bc), tensor_objects(ab, c), dA(ga, gb, gc), witness);
}

// Transpose of the associator layout, built from the proassociator inverse.
Morphism LiftedMonoidal::associator_inverse(const Object& a, const Object& b, const Object& c) const {
  const Category& base = *p_.base;
  const Object &ga = F::generators(a), &gb = F::generators(b), &gc = F::generators(c);
  const Object &ra = F::relations(a), &rb = F::relations(b), &rc = F::relations(c);
  Object ab = tensor_objects(a, b), bc = tensor_objects(b, c);
  Object gab = F::generators(ab), gbc = F::generators(bc);
  std::vector<Object> ab_blocks = relation_blocks(a, b), bc_blocks = relation_blocks(b, c);
  auto dT = p_.protensor_datum;
  auto dI = p_.associator_inverse_datum;
  Morphism id_a = base.identity(ga), id_c = base.identity(gc);

  std::vector<Object> vs{p_.r(gab, gc), p_.g(p_.r(ga, gb), gc)};
  std::vector<Object> vt{p_.r(ga, gbc), p_.g(ga, p_.r(gb, gc))};
  Morphism V = p_.associator_inverse_witness(ga, gb, gc);
  auto v = [&](std::size_t i, std::size_t j) {
    return base.compose({base.injection(vs, i), V, base.projection(vt, j)});
  };
  auto split = [&](std::size_t k) { return dT(base.projection(ab_blocks, k), id_c); };
  auto into = [&](std::size_t k) { return dT(id_a, base.injection(bc_blocks, k)); };

  Entries e(3, std::vector<std::optional<Morphism>>(3));
  e[0][0] = v(0, 0);
  e[0][1] = base.compose(v(0, 1), into(0));
  e[2][0] = base.compose(split(0), v(1, 0));
  e[2][1] = base.add(base.compose({split(0), v(1, 1), into(0)}),
                     base.compose({split(1), dI(ga, rb, gc), into(2)}));
  e[2][2] = base.compose(split(2), dI(ra, gb, gc));
  e[1][1] = base.compose(dI(ga, gb, rc), into(1));
  Morphism witness = base.block_morphism(relation_blocks(ab, c), relation_blocks(a, bc), e);
  return f_->morphism_preferring(tensor_objects(ab, c), tensor_objects(a, bc), dI(ga, gb, gc), witness);
}

// Anti-diagonal witness: omega_Br on r_T, and delta_Br swapping the two argument blocks.
Morphism LiftedMonoidal::braiding(const Object& a, const Object& b) const {
  if (!p_.braiding_datum) throw CapabilityError("no probraiding declared");
  const Object &ga = F::generators(a), &gb = F::generators(b);
  Entries e(3, std::vector<std::optional<Morphism>>(3));
  e[0][0] = p_.braiding_witness(ga, gb);
  e[1][2] = p_.braiding_datum(ga, F::relations(b));
  e[2][1] = p_.braiding_datum(F::relations(a), gb);
  Morphism witness = p_.base->block_morphism(relation_blocks(a, b), relation_blocks(b, a), e);
  return f_->morphism_preferring(tensor_objects(a, b), tensor_objects(b, a), p_.braiding_datum(ga, gb),
                                 witness);
}

const ProInternalHom& LiftedMonoidal::hom_data() const {
  if (!p_.internal_hom) throw CapabilityError("no prointernal hom declared");
  return *p_.internal_hom;
}

Object LiftedMonoidal::generator_hom(const Object& x, const Object& c) const {
  const ProInternalHom& h = hom_data();
  const Category& base = *p_.base;
  return f_->object(base.from_direct_sum({F::relation(h.hom(x, F::generators(c))),
                                          h.datum(base.identity(x), F::relation(c))}));
}

Morphism LiftedMonoidal::generator_hom_morphism(const Morphism& alpha, const Morphism& gamma) const {
  const ProInternalHom& h = hom_data();
  const Morphism& g = F::datum(gamma);
  Morphism witness = p_.base->direct_sum_morphism({h.witness(alpha, g), h.datum(alpha, F::witness(gamma))});
  return f_->morphism_preferring(generator_hom(alpha.target, gamma.source),
                                 generator_hom(alpha.source, gamma.target), h.datum(alpha, g), witness);
}

Morphism LiftedMonoidal::hom_relation_map(const Object& a, const Object& c) const {
  return generator_hom_morphism(F::relation(a), f_->identity(c));
}

Object LiftedMonoidal::internal_hom(const Object& a, const Object& c) const {
  return f_->kernel_object(hom_relation_map(a, c));
}

Morphism LiftedMonoidal::hom_morphisms(const Morphism& alpha, const Morphism& gamma) const {
  Morphism into = f_->compose(f_->kernel_embedding(hom_relation_map(alpha.target, gamma.source)),
                              generator_hom_morphism(F::datum(alpha), gamma));
  return f_->kernel_lift(hom_relation_map(alpha.source, gamma.target), into);
}

Morphism LiftedMonoidal::coevaluation(const Object& b, const Object& a) const {
  const ProInternalHom& h = hom_data();
  Object ba = tensor_objects(b, a);
  Morphism t = f_->morphism(b, generator_hom(F::generators(a), ba),
                            h.coevaluation_datum(F::generators(b), F::generators(a)));
  return f_->kernel_lift(hom_relation_map(a, ba), t);
}

Morphism LiftedMonoidal::evaluation(const Object& a, const Object& c) const {
  const ProInternalHom& h = hom_data();
  const Category& base = *p_.base;
  Morphism k = f_->kernel_embedding(hom_relation_map(a, c));
  const Object& ga = F::generators(a);
  Morphism datum = base.compose(p_.protensor_datum(F::datum(k), base.identity(ga)),
                                h.evaluation_datum(ga, F::generators(c)));
  return f_->morphism(tensor_objects(k.source, a), c, datum);
}

MonoidalStructure lift_promonoidal(const PromonoidalStructure& p, const std::vector<Object>& generator_samples) {
  auto L = std::make_shared<const LiftedMonoidal>(p);
  MonoidalStructure m;
  m.category = p.freyd;
  m.tensor = [L](const Object& a, const Object& b) { return L->tensor_objects(a, b); };
  m.tensor_morphisms = [L](const Morphism& f, const Morphism& g) { return L->tensor_morphisms(f, g); };
  m.unit = p.unit;
  m.associator = [L](const Object& a, const Object& b, const Object& c) { return L->associator(a, b, c); };
  m.associator_inverse = [L](const Object& a, const Object& b, const Object& c) {
    return L->associator_inverse(a, b, c);
  };
  m.left_unitor = [L](const Object& a) { return L->left_unitor(a); };
  m.left_unitor_inverse = [L](const Object& a) { return L->left_unitor_inverse(a); };
  m.right_unitor = [L](const Object& a) { return L->right_unitor(a); };
  m.right_unitor_inverse = [L](const Object& a) { return L->right_unitor_inverse(a); };
  if (p.braiding_datum) {
    m.braiding = [L](const Object& a, const Object& b) { return L->braiding(a, b); };
    m.symmetric = p.symmetric;
  }
  if (p.internal_hom) {
    ClosedStructure c;
    c.internal_hom = [L](const Object& a, const Object& x) { return L->internal_hom(a, x); };
    c.hom_morphisms = [L](const Morphism& f, const Morphism& g) { return L->hom_morphisms(f, g); };
    c.coevaluation = [L](const Object& b, const Object& a) { return L->coevaluation(b, a); };
    c.evaluation = [L](const Object& a, const Object& x) { return L->evaluation(a, x); };
    m.closed = c;
  }

  if (!generator_samples.empty()) {
    std::vector<Object> embedded;
    for (const auto& x : generator_samples) embedded.push_back(p.freyd->emb(x));
    Report r = check_all_coherence(m, embedded);
    for (const auto& e : r.entries)
      if (!e.passed)
        throw PreconditionError("restricted " + e.check + " fails at " + e.sample +
                                (e.detail.empty() ? "" : ": " + e.detail));
  }
  return m;
}

PromonoidalStructure promonoidal_from_monoidal(const MonoidalStructure& m) {
  PromonoidalStructure p;
  CategoryPtr x = m.category;
  p.base = x;
  p.freyd = freyd(x);
  auto fr = p.freyd;
  Object z = x->zero_object();
  Morphism zz = x->zero_morphism(z, z);
  p.protensor = [m, fr](const Object& a, const Object& b) { return fr->emb(m.tensor(a, b)); };
  p.protensor_datum = m.tensor_morphisms;
  p.protensor_witness = [zz](const Morphism&, const Morphism&) { return zz; };
  p.unit = fr->emb(m.unit);
  p.associator_datum = m.associator;
  p.associator_inverse_datum = m.associator_inverse;
  p.associator_witness = [m, x, z](const Object& a, const Object&, const Object& c) {
    return x->zero_morphism(x->direct_sum({z, m.tensor(a, z)}), x->direct_sum({z, m.tensor(z, c)}));
  };
  p.associator_inverse_witness = [m, x, z](const Object& a, const Object&, const Object& c) {
    return x->zero_morphism(x->direct_sum({z, m.tensor(z, c)}), x->direct_sum({z, m.tensor(a, z)}));
  };
  p.left_unitor_datum = m.left_unitor;
  p.left_unitor_inverse_datum = m.left_unitor_inverse;
  p.right_unitor_datum = m.right_unitor;
  p.right_unitor_inverse_datum = m.right_unitor_inverse;
  if (m.braided()) {
    p.braiding_datum = m.braiding;
    p.braiding_witness = [zz](const Object&, const Object&) { return zz; };
    p.symmetric = m.symmetric;
  }
  if (m.closed) {
    ClosedStructure c = *m.closed;
    ProInternalHom h;
    h.hom = [c, fr](const Object& a, const Object& b) { return fr->emb(c.internal_hom(a, b)); };
    h.datum = c.hom_morphisms;
    h.witness = [zz](const Morphism&, const Morphism&) { return zz; };
    h.coevaluation_datum = c.coevaluation;
    h.evaluation_datum = c.evaluation;
    p.internal_hom = h;
  }
  return p;
}

MonoidalStructure opposite_monoidal(const MonoidalStructure& m) {
  using Op = OppositeCategory;
  MonoidalStructure o;
  o.category = opposite(m.category);
  o.tensor = m.tensor;
  o.tensor_morphisms = [m](const Morphism& f, const Morphism& g) {
    return Op::reverse(m.tensor_morphisms(Op::reverse(f), Op::reverse(g)));
  };
  o.unit = m.unit;
  o.associator = [m](const Object& a, const Object& b, const Object& c) {
    return Op::reverse(m.associator_inverse(a, b, c));
  };
  o.associator_inverse = [m](const Object& a, const Object& b, const Object& c) {
    return Op::reverse(m.associator(a, b, c));
  };
  o.left_unitor = [m](const Object& a) { return Op::reverse(m.left_unitor_inverse(a)); };
  o.left_unitor_inverse = [m](const Object& a) { return Op::reverse(m.left_unitor(a)); };
  o.right_unitor = [m](const Object& a) { return Op::reverse(m.right_unitor_inverse(a)); };
  o.right_unitor_inverse = [m](const Object& a) { return Op::reverse(m.right_unitor(a)); };
  if (m.braided()) {
    o.braiding = [m](const Object& a, const Object& b) { return Op::reverse(m.braiding(b, a)); };
    o.symmetric = m.symmetric;
  }
  return o;
}

MultilinearFunctor tensor_functor(const MonoidalStructure& m) {
  MultilinearFunctor f;
  f.sources = {m.category, m.category};
  f.target = m.category;
  f.on_objects = [m](const std::vector<Object>& xs) { return m.tensor(xs[0], xs[1]); };
  f.on_morphisms = [m](const std::vector<Morphism>& fs) { return m.tensor_morphisms(fs[0], fs[1]); };
  return f;
}

MultilinearFunctor protensor_functor(const PromonoidalStructure& p) {
  MultilinearFunctor f;
  f.sources = {p.base, p.base};
  f.target = p.freyd;
  f.on_objects = [p](const std::vector<Object>& xs) { return p.protensor(xs[0], xs[1]); };
  f.on_morphisms = [p](const std::vector<Morphism>& fs) {
    return p.freyd->morphism(p.protensor(fs[0].source, fs[1].source), p.protensor(fs[0].target, fs[1].target),
                             p.protensor_datum(fs[0], fs[1]), p.protensor_witness(fs[0], fs[1]));
  };
  return f;
}

}  // namespace fpcat
