#include "fpcat/functor.hpp"

namespace fpcat {

Object MultilinearFunctor::operator()(const std::vector<Object>& xs) const {
  if (xs.size() != arity()) throw PreconditionError("functor applied to the wrong number of objects");
  return on_objects(xs);
}

Morphism MultilinearFunctor::operator()(const std::vector<Morphism>& fs) const {
  if (fs.size() != arity()) throw PreconditionError("functor applied to the wrong number of morphisms");
  return on_morphisms(fs);
}

std::vector<std::shared_ptr<const FreydCategory>> freyd_sources(const MultilinearFunctor& f) {
  std::vector<std::shared_ptr<const FreydCategory>> out;
  for (const auto& s : f.sources) out.push_back(freyd(s));
  return out;
}

namespace {

std::vector<Object> generator_tuple(const std::vector<Object>& freyd_objects) {
  std::vector<Object> out;
  for (const auto& a : freyd_objects) out.push_back(FreydCategory::generators(a));
  return out;
}

std::vector<Morphism> datum_tuple(const std::vector<Morphism>& fs) {
  std::vector<Morphism> out;
  for (const auto& f : fs) out.push_back(FreydCategory::datum(f));
  return out;
}

// F(id, .., m_j, .., id) at the objects xs, with slot j replaced by m.
Morphism slot_map(const MultilinearFunctor& f, const std::vector<Object>& xs, std::size_t j,
                  const Morphism& m) {
  std::vector<Morphism> args;
  for (std::size_t k = 0; k < xs.size(); ++k) args.push_back(k == j ? m : f.sources[k]->identity(xs[k]));
  return f(args);
}

std::vector<CategoryPtr> as_categories(const std::vector<std::shared_ptr<const FreydCategory>>& freyds) {
  return {freyds.begin(), freyds.end()};
}

void require_arity(const MultilinearFunctor& f, std::size_t n) {
  if (f.arity() == 0) throw PreconditionError("functors need at least one argument");
  if (f.arity() != n) throw PreconditionError("functor arity does not match the Freyd categories given");
}

}  // namespace

Morphism relation_column(const MultilinearFunctor& f, const std::vector<Object>& freyd_objects) {
  std::vector<Object> gens = generator_tuple(freyd_objects);
  std::vector<Morphism> parts;
  for (std::size_t j = 0; j < gens.size(); ++j)
    parts.push_back(slot_map(f, gens, j, FreydCategory::relation(freyd_objects[j])));
  return f.target->from_direct_sum(parts);
}

MultilinearFunctor extend_functor(const MultilinearFunctor& f,
                                  const std::vector<std::shared_ptr<const FreydCategory>>& freyds) {
  require_arity(f, freyds.size());
  f.target->require_capability(f.target->capabilities().cokernels, "cokernels (to extend a functor)");
  MultilinearFunctor hat;
  hat.sources = as_categories(freyds);
  hat.target = f.target;
  hat.on_objects = [f](const std::vector<Object>& as) {
    return f.target->cokernel_object(relation_column(f, as));
  };
  hat.on_morphisms = [f](const std::vector<Morphism>& ms) {
    std::vector<Object> src, tgt;
    for (const auto& m : ms) {
      src.push_back(m.source);
      tgt.push_back(m.target);
    }
    const Category& b = *f.target;
    Morphism into = b.compose(f(datum_tuple(ms)), b.cokernel_projection(relation_column(f, tgt)));
    return b.cokernel_colift(relation_column(f, src), into);
  };
  return hat;
}

MultilinearFunctor extend_functor(const MultilinearFunctor& f) { return extend_functor(f, freyd_sources(f)); }

NaturalTransformation extend_nat_trans(const NaturalTransformation& nu, const MultilinearFunctor& f_hat,
                                       const MultilinearFunctor& g_hat) {
  if (!(nu.source.target == nu.target.target)) throw PreconditionError("natural transformation between functors with different targets");
  NaturalTransformation out;
  out.source = f_hat;
  out.target = g_hat;
  const MultilinearFunctor f = nu.source;
  const MultilinearFunctor g = nu.target;
  auto component = nu.component;
  out.component = [f, g, component](const std::vector<Object>& as) {
    const Category& b = *f.target;
    Morphism into = b.compose(component(generator_tuple(as)), b.cokernel_projection(relation_column(g, as)));
    return b.cokernel_colift(relation_column(f, as), into);
  };
  return out;
}

MultilinearFunctor restrict_functor(const MultilinearFunctor& g,
                                    const std::vector<std::shared_ptr<const FreydCategory>>& freyds) {
  require_arity(g, freyds.size());
  MultilinearFunctor out;
  for (const auto& fr : freyds) out.sources.push_back(fr->base());
  out.target = g.target;
  out.on_objects = [g, freyds](const std::vector<Object>& xs) {
    std::vector<Object> e;
    for (std::size_t k = 0; k < xs.size(); ++k) e.push_back(freyds[k]->emb(xs[k]));
    return g(e);
  };
  out.on_morphisms = [g, freyds](const std::vector<Morphism>& ms) {
    std::vector<Morphism> e;
    for (std::size_t k = 0; k < ms.size(); ++k) e.push_back(freyds[k]->emb(ms[k]));
    return g(e);
  };
  return out;
}

NaturalTransformation embedding_comparison(const MultilinearFunctor& f,
                                           const std::vector<std::shared_ptr<const FreydCategory>>& freyds) {
  NaturalTransformation out;
  out.source = f;
  out.target = restrict_functor(extend_functor(f, freyds), freyds);
  out.component = [f, freyds](const std::vector<Object>& xs) {
    std::vector<Object> e;
    for (std::size_t k = 0; k < xs.size(); ++k) e.push_back(freyds[k]->emb(xs[k]));
    return f.target->cokernel_projection(relation_column(f, e));
  };
  return out;
}

NaturalTransformation restriction_comparison(const MultilinearFunctor& g,
                                             const std::vector<std::shared_ptr<const FreydCategory>>& freyds) {
  MultilinearFunctor restricted = restrict_functor(g, freyds);
  NaturalTransformation out;
  out.source = extend_functor(restricted, freyds);
  out.target = g;
  out.component = [g, restricted, freyds](const std::vector<Object>& as) {
    std::vector<Morphism> ps;
    for (std::size_t k = 0; k < as.size(); ++k) ps.push_back(freyds[k]->generator_projection(as[k]));
    return g.target->cokernel_colift(relation_column(restricted, as), g(ps));
  };
  return out;
}

Morphism inverse_of(const Category& c, const Morphism& phi) {
  auto x = c.colift(phi, c.identity(phi.source));
  if (!x) throw InvariantViolation("morphism has no right inverse: " + phi.describe());
  if (!c.is_equal(c.compose(*x, phi), c.identity(phi.target)))
    throw InvariantViolation("right inverse is not a left inverse");
  return *x;
}

bool check_right_exactness(const MultilinearFunctor& f, const std::vector<Morphism>& alphas,
                           std::string* failure) {
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  const Category& b = *f.target;
  Capabilities caps = b.capabilities();
  b.require_capability(caps.kernels && caps.cokernels, "kernels and cokernels (to decide exactness)");
  if (alphas.size() != f.arity()) throw PreconditionError("tuple length differs from functor arity");

  std::vector<Object> gens;
  std::vector<Morphism> projections;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    gens.push_back(alphas[j].target);
    projections.push_back(f.sources[j]->cokernel_projection(alphas[j]));
  }
  Morphism fpi = f(projections);
  std::vector<Morphism> parts;
  for (std::size_t j = 0; j < alphas.size(); ++j) parts.push_back(slot_map(f, gens, j, alphas[j]));
  Morphism column = b.from_direct_sum(parts);

  Object coker = b.cokernel_object(fpi);
  if (!b.is_zero(b.identity(coker))) return fail("F(coker) is not reached: F(pi) is not epi");
  if (!b.is_zero(b.compose(column, fpi))) return fail("composite of the sequence is not zero");
  if (!b.is_zero(b.compose(b.kernel_embedding(fpi), b.cokernel_projection(column))))
    return fail("kernel of F(pi) is larger than the image of the column");
  return true;
}

bool naturality_square_commutes(const NaturalTransformation& nu, const std::vector<Morphism>& ms) {
  std::vector<Object> xs, ys;
  for (const auto& m : ms) {
    xs.push_back(m.source);
    ys.push_back(m.target);
  }
  const Category& b = *nu.source.target;
  return b.is_equal(b.compose(nu.source(ms), nu(ys)), b.compose(nu(xs), nu.target(ms)));
}

}  // namespace fpcat
