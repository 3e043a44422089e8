#pragma once

#include "fpcat/category.hpp"

namespace fpcat {

struct TupleObject final : Payload {
  std::vector<Object> components;
  explicit TupleObject(std::vector<Object> c) : components(std::move(c)) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override;
};

struct TupleMorphism final : Payload {
  std::vector<Morphism> components;
  explicit TupleMorphism(std::vector<Morphism> c) : components(std::move(c)) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override;
};

/// C_1 x ... x C_n with everything computed slot by slot.
class ProductCategory : public Category {
 public:
  explicit ProductCategory(std::vector<CategoryPtr> factors);

  const std::vector<CategoryPtr>& factors() const { return factors_; }
  Object tuple(std::vector<Object> components) const;
  Morphism tuple(std::vector<Morphism> components) const;
  const std::vector<Object>& components(const Object& a) const;
  const std::vector<Morphism>& components(const Morphism& f) const;

  std::string name() const override;
  Capabilities capabilities() const override;

  Morphism identity(const Object& a) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  using Category::compose;
  Morphism add(const Morphism& f, const Morphism& g) const override;
  Morphism negate(const Morphism& f) const override;
  Morphism zero_morphism(const Object& source, const Object& target) const override;
  Object zero_object() const override;
  bool is_equal(const Morphism& f, const Morphism& g) const override;

  Object direct_sum(const std::vector<Object>& summands) const override;
  Morphism injection(const std::vector<Object>& summands, std::size_t i) const override;
  Morphism projection(const std::vector<Object>& summands, std::size_t i) const override;

  std::optional<Morphism> lift(const Morphism& along, const Morphism& b) const override;
  std::optional<Morphism> colift(const Morphism& along, const Morphism& b) const override;

  Morphism weak_kernel_embedding(const Morphism& f) const override;
  Morphism weak_cokernel_projection(const Morphism& f) const override;
  Morphism kernel_embedding(const Morphism& f) const override;
  Morphism kernel_lift(const Morphism& f, const Morphism& t) const override;
  Morphism cokernel_projection(const Morphism& f) const override;
  Morphism cokernel_colift(const Morphism& f, const Morphism& t) const override;

 private:
  std::vector<Object> slot(const std::vector<Object>& objs, std::size_t k) const;
  template <class Fn>
  Morphism map1(const Morphism& f, Fn fn) const;
  template <class Fn>
  Morphism map2(const Morphism& f, const Morphism& g, Fn fn) const;

  std::vector<CategoryPtr> factors_;
};

/// Throws PreconditionError on an empty list.
std::shared_ptr<const ProductCategory> product_category(std::vector<CategoryPtr> factors);

}  // namespace fpcat
