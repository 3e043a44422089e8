#include "fpcat/freyd.hpp"

namespace fpcat {

bool FreydObject::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const FreydObject*>(&other);
  return o && o->relation.same_as(relation);
}

std::string FreydObject::describe() const {
  return "(" + relation.target.describe() + " <- " + relation.datum->describe() + ")";
}

bool FreydMorphism::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const FreydMorphism*>(&other);
  return o && o->datum.same_as(datum) && o->witness.same_as(witness);
}

std::string FreydMorphism::describe() const { return "{" + datum.datum->describe() + "}"; }

FreydCategory::FreydCategory(CategoryPtr base) : base_(std::move(base)) {
  if (!base_->capabilities().lifts)
    throw CapabilityError("Freyd category needs lifts in " + base_->name());
}

Capabilities FreydCategory::capabilities() const {
  Capabilities b = base_->capabilities();
  Capabilities c;
  c.lifts = c.colifts = c.linear_systems = b.linear_systems;
  c.cokernels = c.weak_cokernels = true;
  c.kernels = c.weak_kernels = b.weak_kernels;
  return c;
}

Object FreydCategory::object(const Morphism& relation) const {
  return Object(std::make_shared<FreydObject>(relation));
}

Morphism FreydCategory::trusted(const Object& source, const Object& target, Morphism datum,
                                Morphism witness) const {
  return {source, target, std::make_shared<FreydMorphism>(std::move(datum), std::move(witness))};
}

bool FreydCategory::witness_valid(const Object& source, const Object& target, const Morphism& datum,
                                  const Morphism& witness) const {
  const Morphism& rs = relation(source);
  const Morphism& rt = relation(target);
  if (!(witness.source == rs.source) || !(witness.target == rt.source)) return false;
  return base_->is_equal(base_->compose(rs, datum), base_->compose(witness, rt));
}

std::optional<Morphism> FreydCategory::derive_witness(const Object& source, const Object& target,
                                                      const Morphism& datum) const {
  return base_->lift(relation(target), base_->compose(relation(source), datum));
}

Morphism FreydCategory::morphism(const Object& source, const Object& target, const Morphism& datum,
                                 const std::optional<Morphism>& witness) const {
  if (!(datum.source == generators(source)) || !(datum.target == generators(target)))
    throw PreconditionError("datum does not connect the generator objects");
  if (witness) {
    if (!witness_valid(source, target, datum, *witness))
      throw PreconditionError("witness does not satisfy rho * alpha = omega * rho'");
    return trusted(source, target, datum, *witness);
  }
  auto w = derive_witness(source, target, datum);
  if (!w) throw PreconditionError("datum is not compatible with the relations (no witness exists)");
  return trusted(source, target, datum, *w);
}

Morphism FreydCategory::morphism_preferring(const Object& source, const Object& target,
                                            const Morphism& datum, const Morphism& proposed) const {
  if (witness_valid(source, target, datum, proposed)) return trusted(source, target, datum, proposed);
  return morphism(source, target, datum);
}

void FreydCategory::require_morphism(const Morphism& f) const { (void)f.as<FreydMorphism>(); }

Object FreydCategory::emb(const Object& x) const {
  return object(base_->zero_morphism(base_->zero_object(), x));
}

Morphism FreydCategory::emb(const Morphism& f) const {
  Object z = base_->zero_object();
  return trusted(emb(f.source), emb(f.target), f, base_->zero_morphism(z, z));
}

Morphism FreydCategory::generator_projection(const Object& a) const {
  return trusted(emb(generators(a)), a, base_->identity(generators(a)),
                 base_->zero_morphism(base_->zero_object(), relations(a)));
}

Morphism FreydCategory::identity(const Object& a) const {
  return trusted(a, a, base_->identity(generators(a)), base_->identity(relations(a)));
}

Morphism FreydCategory::compose(const Morphism& f, const Morphism& g) const {
  require_composable(f, g);
  return trusted(f.source, g.target, base_->compose(datum(f), datum(g)),
                 base_->compose(witness(f), witness(g)));
}

Morphism FreydCategory::add(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g);
  return trusted(f.source, f.target, base_->add(datum(f), datum(g)), base_->add(witness(f), witness(g)));
}

Morphism FreydCategory::negate(const Morphism& f) const {
  return trusted(f.source, f.target, base_->negate(datum(f)), base_->negate(witness(f)));
}

Morphism FreydCategory::zero_morphism(const Object& source, const Object& target) const {
  return trusted(source, target, base_->zero_morphism(generators(source), generators(target)),
                 base_->zero_morphism(relations(source), relations(target)));
}

Object FreydCategory::zero_object() const { return direct_sum({}); }

bool FreydCategory::is_equal(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g);
  if (datum(f).same_as(datum(g))) return true;
  return base_->lift(relation(f.target), base_->subtract(datum(f), datum(g))).has_value();
}

Object FreydCategory::direct_sum(const std::vector<Object>& summands) const {
  std::vector<Morphism> rels;
  for (const auto& s : summands) rels.push_back(relation(s));
  return object(base_->direct_sum_morphism(rels));
}

Morphism FreydCategory::injection(const std::vector<Object>& summands, std::size_t i) const {
  std::vector<Object> gens, rels;
  for (const auto& s : summands) {
    gens.push_back(generators(s));
    rels.push_back(relations(s));
  }
  return trusted(summands.at(i), direct_sum(summands), base_->injection(gens, i), base_->injection(rels, i));
}

Morphism FreydCategory::projection(const std::vector<Object>& summands, std::size_t i) const {
  std::vector<Object> gens, rels;
  for (const auto& s : summands) {
    gens.push_back(generators(s));
    rels.push_back(relations(s));
  }
  return trusted(direct_sum(summands), summands.at(i), base_->projection(gens, i), base_->projection(rels, i));
}

// Unknowns in the base: a datum xi_j and witness omega_j per unknown, and a
// relation coefficient lambda_i per equation.
//   rho_{S_j} xi_j - omega_j rho_{T_j} = 0
//   sum_t l_t xi_{j(t)} r_t - lambda_i rho_{E_i} = b_i
std::optional<std::vector<Morphism>> FreydCategory::solve(const LinearSystem& system) const {
  require_capability(base_->capabilities().linear_systems, "linear systems in the base");
  LinearSystem lowered;
  std::vector<std::size_t> xi, omega;
  for (const auto& u : system.unknowns) {
    xi.push_back(lowered.add_unknown(generators(u.source), generators(u.target)));
    omega.push_back(lowered.add_unknown(relations(u.source), relations(u.target)));
  }
  for (std::size_t j = 0; j < system.unknowns.size(); ++j) {
    const auto& u = system.unknowns[j];
    lowered.equations.push_back(
        {{{xi[j], relation(u.source), base_->identity(generators(u.target))},
          {omega[j], base_->negate(base_->identity(relations(u.source))), relation(u.target)}},
         base_->zero_morphism(relations(u.source), generators(u.target))});
  }
  for (const auto& eq : system.equations) {
    const Object& es = eq.rhs.source;
    const Object& et = eq.rhs.target;
    std::size_t lambda = lowered.add_unknown(generators(es), relations(et));
    LinearSystem::Equation low{{}, datum(eq.rhs)};
    for (const auto& t : eq.terms) low.terms.push_back({xi.at(t.unknown), datum(t.left), datum(t.right)});
    low.terms.push_back({lambda, base_->negate(base_->identity(generators(es))), relation(et)});
    lowered.equations.push_back(std::move(low));
  }
  auto sol = base_->solve(lowered);
  if (!sol) return std::nullopt;
  std::vector<Morphism> out;
  for (std::size_t j = 0; j < system.unknowns.size(); ++j)
    out.push_back(trusted(system.unknowns[j].source, system.unknowns[j].target, (*sol)[xi[j]],
                          (*sol)[omega[j]]));
  return out;
}

FreydCategory::KernelData FreydCategory::kernel_data(const Morphism& f) const {
  require_capability(base_->capabilities().weak_kernels, "weak kernels (needed for kernels)");
  const Object& a = f.source;
  const Object& b = f.target;
  Morphism column = base_->from_direct_sum({datum(f), relation(b)});
  Morphism w = base_->weak_kernel_embedding(column);
  Morphism u = base_->compose(w, base_->projection({generators(a), relations(b)}, 0));
  Morphism column2 = base_->from_direct_sum({u, relation(a)});
  Morphism v = base_->weak_kernel_embedding(column2);
  std::vector<Object> parts{u.source, relations(a)};
  Morphism s = base_->compose(v, base_->projection(parts, 0));
  Morphism omega = base_->negate(base_->compose(v, base_->projection(parts, 1)));
  Object k = object(s);
  return {w, u, k, trusted(k, a, u, omega)};
}

Morphism FreydCategory::kernel_embedding(const Morphism& f) const {
  require_morphism(f);
  return kernel_data(f).embedding;
}

Morphism FreydCategory::kernel_lift(const Morphism& f, const Morphism& t) const {
  require_composable(t, f);
  KernelData kd = kernel_data(f);
  Morphism tau = datum(t);
  auto lambda = base_->lift(relation(f.target), base_->compose(tau, datum(f)));
  if (!lambda) throw PreconditionError("kernel_lift: test morphism does not compose to zero");
  auto mu = base_->lift(kd.w, base_->into_direct_sum({tau, base_->negate(*lambda)}));
  if (!mu) throw InvariantViolation("kernel_lift: weak kernel failed to factor a syzygy");
  return morphism(t.source, kd.object, *mu);
}

Morphism FreydCategory::cokernel_projection(const Morphism& f) const {
  require_morphism(f);
  const Object& b = f.target;
  Object c = object(base_->from_direct_sum({relation(b), datum(f)}));
  return trusted(b, c, base_->identity(generators(b)),
                 base_->injection({relations(b), generators(f.source)}, 0));
}

Morphism FreydCategory::cokernel_colift(const Morphism& f, const Morphism& t) const {
  require_composable(f, t);
  Morphism p = cokernel_projection(f);
  auto lambda = base_->lift(relation(t.target), base_->compose(datum(f), datum(t)));
  if (!lambda) throw PreconditionError("cokernel_colift: test morphism does not vanish on the image");
  return trusted(p.target, t.target, datum(t), base_->from_direct_sum({witness(t), *lambda}));
}

std::shared_ptr<const FreydCategory> freyd(const CategoryPtr& base) {
  return std::make_shared<FreydCategory>(base);
}

}  // namespace fpcat
