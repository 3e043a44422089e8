#pragma once

#include "fpcat/category.hpp"

namespace fpcat {

/// (a <- rho : r -> a), a presentation by generators a and relations r.
struct FreydObject final : Payload {
  Morphism relation;
  explicit FreydObject(Morphism rho) : relation(std::move(rho)) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override;
};

/// Datum alpha : a -> a' with witness omega : r -> r' such that rho * alpha = omega * rho'.
struct FreydMorphism final : Payload {
  Morphism datum;
  Morphism witness;
  FreydMorphism(Morphism d, Morphism w) : datum(std::move(d)), witness(std::move(w)) {}
  bool same_as(const Payload& other) const override;
  std::string describe() const override;
};

/// The Freyd category A(A) of an additive category A with lifts.
class FreydCategory : public Category {
 public:
  /// Throws CapabilityError if the base has no lifts.
  explicit FreydCategory(CategoryPtr base);

  const CategoryPtr& base() const { return base_; }

  Object object(const Morphism& relation) const;
  /// Checks the witness if one is given; otherwise derives it by a lift in the base.
  Morphism morphism(const Object& source, const Object& target, const Morphism& datum,
                    const std::optional<Morphism>& witness = std::nullopt) const;
  /// Like morphism(), but falls back to deriving a witness when the proposed one is wrong.
  Morphism morphism_preferring(const Object& source, const Object& target, const Morphism& datum,
                               const Morphism& proposed_witness) const;

  static const Morphism& relation(const Object& a) { return a.as<FreydObject>().relation; }
  static const Object& generators(const Object& a) { return relation(a).target; }
  static const Object& relations(const Object& a) { return relation(a).source; }
  static const Morphism& datum(const Morphism& f) { return f.as<FreydMorphism>().datum; }
  static const Morphism& witness(const Morphism& f) { return f.as<FreydMorphism>().witness; }

  /// emb(x) = (x <- 0).
  Object emb(const Object& x) const;
  Morphism emb(const Morphism& f) const;
  /// The canonical epimorphism emb(a) -> A.
  Morphism generator_projection(const Object& a) const;

  std::string name() const override { return "A(" + base_->name() + ")"; }
  Capabilities capabilities() const override;

  Morphism identity(const Object& a) const override;
  Morphism compose(const Morphism& f, const Morphism& g) const override;
  using Category::compose;
  Morphism add(const Morphism& f, const Morphism& g) const override;
  Morphism negate(const Morphism& f) const override;
  Morphism zero_morphism(const Object& source, const Object& target) const override;
  Object zero_object() const override;
  /// alpha ~ alpha' iff alpha - alpha' factors through the target relation.
  bool is_equal(const Morphism& f, const Morphism& g) const override;

  Object direct_sum(const std::vector<Object>& summands) const override;
  Morphism injection(const std::vector<Object>& summands, std::size_t i) const override;
  Morphism projection(const std::vector<Object>& summands, std::size_t i) const override;

  std::optional<std::vector<Morphism>> solve(const LinearSystem& system) const override;

  Morphism weak_kernel_embedding(const Morphism& f) const override { return kernel_embedding(f); }
  Morphism weak_cokernel_projection(const Morphism& f) const override { return cokernel_projection(f); }
  Morphism kernel_embedding(const Morphism& f) const override;
  Morphism kernel_lift(const Morphism& f, const Morphism& t) const override;
  Morphism cokernel_projection(const Morphism& f) const override;
  Morphism cokernel_colift(const Morphism& f, const Morphism& t) const override;

 private:
  Morphism trusted(const Object& source, const Object& target, Morphism datum, Morphism witness) const;
  std::optional<Morphism> derive_witness(const Object& source, const Object& target,
                                         const Morphism& datum) const;
  bool witness_valid(const Object& source, const Object& target, const Morphism& datum,
                     const Morphism& witness) const;
  void require_morphism(const Morphism& f) const;

  struct KernelData {
    Morphism w;  ///< weak kernel k -> a (+) r_b of the column (alpha; rho_b)
    Morphism u;  ///< w followed by the first projection
    Object object;
    Morphism embedding;
  };
  KernelData kernel_data(const Morphism& f) const;

  CategoryPtr base_;
};

std::shared_ptr<const FreydCategory> freyd(const CategoryPtr& base);

}  // namespace fpcat
