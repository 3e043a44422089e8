#pragma once

#include "fpcat/category.hpp"
#include "fpcat/matrix.hpp"

namespace fpcat {

/// The free module R^{1 x rank}.
struct RowsObject final : Payload {
  std::size_t rank;
  explicit RowsObject(std::size_t r) : rank(r) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override { return "R^" + std::to_string(rank); }
};

struct RowsMorphism final : Payload {
  Matrix matrix;
  explicit RowsMorphism(Matrix m) : matrix(std::move(m)) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override { return matrix.to_string(); }
};

/// Rows_R: free row modules of finite rank and matrices between them.
class RowsCategory : public Category {
 public:
  explicit RowsCategory(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  Object object(std::size_t rank) const;
  Morphism morphism(Matrix m) const;
  Morphism morphism(std::initializer_list<std::initializer_list<long>> rows) const;
  static std::size_t rank(const Object& a) { return a.as<RowsObject>().rank; }
  const Matrix& matrix(const Morphism& f) const;

  std::string name() const override { return "Rows_" + ring_.name(); }
  Capabilities capabilities() const override;

  Morphism identity(const Object& a) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  using Category::compose;
  Morphism add(const Morphism& f, const Morphism& g) const override;
  Morphism negate(const Morphism& f) const override;
  Morphism zero_morphism(const Object& source, const Object& target) const override;
  Object zero_object() const override { return object(0); }
  bool is_equal(const Morphism& f, const Morphism& g) const override;

  Object direct_sum(const std::vector<Object>& summands) const override;
  Morphism injection(const std::vector<Object>& summands, std::size_t i) const override;
  Morphism projection(const std::vector<Object>& summands, std::size_t i) const override;

  std::optional<Morphism> lift(const Morphism& along, const Morphism& b) const override;
  std::optional<Morphism> colift(const Morphism& along, const Morphism& b) const override;
  std::optional<std::vector<Morphism>> solve(const LinearSystem& system) const override;

  /// Generating row syzygies of f.
  Morphism weak_kernel_embedding(const Morphism& f) const override;
  /// Generating column syzygies of f.
  Morphism weak_cokernel_projection(const Morphism& f) const override;

 private:
  Ring ring_;
};

std::shared_ptr<const RowsCategory> rows_category(const Ring& ring);

}  // namespace fpcat
