#include "fpcat/opposite.hpp"

namespace fpcat {

namespace {
using R = OppositeCategory;
}

Capabilities OppositeCategory::capabilities() const {
  Capabilities b = base_->capabilities();
  Capabilities c;
  c.lifts = b.colifts;
  c.colifts = b.lifts;
  c.linear_systems = b.linear_systems;
  c.weak_kernels = b.weak_cokernels;
  c.weak_cokernels = b.weak_kernels;
  c.kernels = b.cokernels;
  c.cokernels = b.kernels;
  return c;
}

Morphism OppositeCategory::identity(const Object& a) const { return base_->identity(a); }

Morphism OppositeCategory::compose(const Morphism& f, const Morphism& g) const {
  require_composable(f, g);
  return R::reverse(base_->compose(R::reverse(g), R::reverse(f)));
}

Morphism OppositeCategory::add(const Morphism& f, const Morphism& g) const {
  return R::reverse(base_->add(R::reverse(f), R::reverse(g)));
}

Morphism OppositeCategory::negate(const Morphism& f) const {
  return R::reverse(base_->negate(R::reverse(f)));
}

Morphism OppositeCategory::zero_morphism(const Object& source, const Object& target) const {
  return R::reverse(base_->zero_morphism(target, source));
}

bool OppositeCategory::is_equal(const Morphism& f, const Morphism& g) const {
  return base_->is_equal(R::reverse(f), R::reverse(g));
}

Object OppositeCategory::direct_sum(const std::vector<Object>& summands) const {
  return base_->direct_sum(summands);
}

Morphism OppositeCategory::injection(const std::vector<Object>& summands, std::size_t i) const {
  return R::reverse(base_->projection(summands, i));
}

Morphism OppositeCategory::projection(const std::vector<Object>& summands, std::size_t i) const {
  return R::reverse(base_->injection(summands, i));
}

std::optional<Morphism> OppositeCategory::lift(const Morphism& along, const Morphism& b) const {
  auto x = base_->colift(R::reverse(along), R::reverse(b));
  if (!x) return std::nullopt;
  return R::reverse(*x);
}

std::optional<Morphism> OppositeCategory::colift(const Morphism& along, const Morphism& b) const {
  auto x = base_->lift(R::reverse(along), R::reverse(b));
  if (!x) return std::nullopt;
  return R::reverse(*x);
}

std::optional<std::vector<Morphism>> OppositeCategory::solve(const LinearSystem& system) const {
  LinearSystem flipped;
  for (const auto& u : system.unknowns) flipped.add_unknown(u.target, u.source);
  for (const auto& eq : system.equations) {
    LinearSystem::Equation e{{}, R::reverse(eq.rhs)};
    for (const auto& t : eq.terms)
      e.terms.push_back({t.unknown, R::reverse(t.right), R::reverse(t.left)});
    flipped.equations.push_back(std::move(e));
  }
  auto sol = base_->solve(flipped);
  if (!sol) return std::nullopt;
  for (auto& x : *sol) x = R::reverse(x);
  return sol;
}

Morphism OppositeCategory::weak_kernel_embedding(const Morphism& f) const {
  return R::reverse(base_->weak_cokernel_projection(R::reverse(f)));
}

Morphism OppositeCategory::weak_cokernel_projection(const Morphism& f) const {
  return R::reverse(base_->weak_kernel_embedding(R::reverse(f)));
}

Morphism OppositeCategory::kernel_embedding(const Morphism& f) const {
  return R::reverse(base_->cokernel_projection(R::reverse(f)));
}

Morphism OppositeCategory::kernel_lift(const Morphism& f, const Morphism& t) const {
  return R::reverse(base_->cokernel_colift(R::reverse(f), R::reverse(t)));
}

Morphism OppositeCategory::cokernel_projection(const Morphism& f) const {
  return R::reverse(base_->kernel_embedding(R::reverse(f)));
}

Morphism OppositeCategory::cokernel_colift(const Morphism& f, const Morphism& t) const {
  return R::reverse(base_->kernel_lift(R::reverse(f), R::reverse(t)));
}

CategoryPtr opposite(const CategoryPtr& c) {
  if (auto op = std::dynamic_pointer_cast<const OppositeCategory>(c)) return op->base();
  return std::make_shared<OppositeCategory>(c);
}

}  // namespace fpcat
