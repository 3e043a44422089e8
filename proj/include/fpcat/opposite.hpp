#pragma once

#include "fpcat/category.hpp"

namespace fpcat {

/// C^op. Objects are shared with C; a morphism a -> b of C^op carries the
/// payload of the C-morphism b -> a.
class OppositeCategory : public Category {
 public:
  explicit OppositeCategory(CategoryPtr base) : base_(std::move(base)) {}

  const CategoryPtr& base() const { return base_; }
  static Morphism reverse(const Morphism& f) { return {f.target, f.source, f.datum}; }

  std::string name() const override { return "(" + base_->name() + ")^op"; }
  Capabilities capabilities() const override;

  Morphism identity(const Object& a) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  using Category::compose;
  Morphism add(const Morphism& f, const Morphism& g) const override;
  Morphism negate(const Morphism& f) const override;
  Morphism zero_morphism(const Object& source, const Object& target) const override;
  Object zero_object() const override { return base_->zero_object(); }
  bool is_equal(const Morphism& f, const Morphism& g) const override;

  Object direct_sum(const std::vector<Object>& summands) const override;
  Morphism injection(const std::vector<Object>& summands, std::size_t i) const override;
  Morphism projection(const std::vector<Object>& summands, std::size_t i) const override;

  std::optional<Morphism> lift(const Morphism& along, const Morphism& b) const override;
  std::optional<Morphism> colift(const Morphism& along, const Morphism& b) const override;
  std::optional<std::vector<Morphism>> solve(const LinearSystem& system) const override;

  Morphism weak_kernel_embedding(const Morphism& f) const override;
  Morphism weak_cokernel_projection(const Morphism& f) const override;
  Morphism kernel_embedding(const Morphism& f) const override;
  Morphism kernel_lift(const Morphism& f, const Morphism& t) const override;
  Morphism cokernel_projection(const Morphism& f) const override;
  Morphism cokernel_colift(const Morphism& f, const Morphism& t) const override;

 private:
  CategoryPtr base_;
};

/// opposite(opposite(c)) returns c itself.
CategoryPtr opposite(const CategoryPtr& c);

}  // namespace fpcat
