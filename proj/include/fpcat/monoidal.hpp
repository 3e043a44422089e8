#pragma once

#include "fpcat/freyd.hpp"
#include "fpcat/functor.hpp"

namespace fpcat {

/// Right adjoints Hom(A, -) of (- (x) A).
struct ClosedStructure {
  std::function<Object(const Object& a, const Object& c)> internal_hom;
  /// Hom(alpha, gamma) : Hom(a, c) -> Hom(a', c') for alpha : a' -> a, gamma : c -> c'.
  std::function<Morphism(const Morphism& alpha, const Morphism& gamma)> hom_morphisms;
  /// coev_{B,A} : B -> Hom(A, B (x) A).
  std::function<Morphism(const Object& b, const Object& a)> coevaluation;
  /// ev_{A,C} : Hom(A, C) (x) A -> C.
  std::function<Morphism(const Object& a, const Object& c)> evaluation;
};

/// A monoidal structure on a category. Ass_{a,b,c} : a (x) (b (x) c) -> (a (x) b) (x) c,
/// LU_a : 1 (x) a -> a, RU_a : a (x) 1 -> a, Br_{a,b} : a (x) b -> b (x) a.
struct MonoidalStructure {
  CategoryPtr category;
  std::function<Object(const Object&, const Object&)> tensor;
  std::function<Morphism(const Morphism&, const Morphism&)> tensor_morphisms;
  Object unit;
  std::function<Morphism(const Object&, const Object&, const Object&)> associator;
  std::function<Morphism(const Object&, const Object&, const Object&)> associator_inverse;
  std::function<Morphism(const Object&)> left_unitor;
  std::function<Morphism(const Object&)> left_unitor_inverse;
  std::function<Morphism(const Object&)> right_unitor;
  std::function<Morphism(const Object&)> right_unitor_inverse;
  /// Empty unless braided.
  std::function<Morphism(const Object&, const Object&)> braiding;
  bool symmetric = false;
  std::optional<ClosedStructure> closed;

  bool braided() const { return static_cast<bool>(braiding); }
};

/// Prointernal hom Hom(a, -) : A -> A(A), with components g_H, r_H, rho_H.
struct ProInternalHom {
  std::function<Object(const Object& a, const Object& b)> hom;
  /// delta_H(alpha, beta) : g_H(a, b) -> g_H(a', b') for alpha : a' -> a, beta : b -> b'.
  std::function<Morphism(const Morphism& alpha, const Morphism& beta)> datum;
  std::function<Morphism(const Morphism& alpha, const Morphism& beta)> witness;
  /// b -> g_H(a, g_T(b, a)).
  std::function<Morphism(const Object& b, const Object& a)> coevaluation_datum;
  /// g_T(g_H(a, b), a) -> b.
  std::function<Morphism(const Object& a, const Object& b)> evaluation_datum;
};

/// Finitely presented promonoidal structure on A: every value lives in A(A) and
/// is presented by generators g, relations r and a relation morphism rho : r -> g.
struct PromonoidalStructure {
  CategoryPtr base;
  std::shared_ptr<const FreydCategory> freyd;

  /// T(a, b) as an object (g_T(a,b) <- r_T(a,b)) of A(A).
  std::function<Object(const Object&, const Object&)> protensor;
  std::function<Morphism(const Morphism&, const Morphism&)> protensor_datum;
  std::function<Morphism(const Morphism&, const Morphism&)> protensor_witness;
  Object unit;

  /// g_T(a, g_T(b,c)) -> g_T(g_T(a,b), c).
  std::function<Morphism(const Object&, const Object&, const Object&)> associator_datum;
  /// r_T(a, g_bc) (+) g_T(a, r_T(b,c))  ->  r_T(g_ab, c) (+) g_T(r_T(a,b), c).
  std::function<Morphism(const Object&, const Object&, const Object&)> associator_witness;
  std::function<Morphism(const Object&, const Object&, const Object&)> associator_inverse_datum;
  std::function<Morphism(const Object&, const Object&, const Object&)> associator_inverse_witness;

  /// g_T(g_1, a) -> a, and its inverse.
  std::function<Morphism(const Object&)> left_unitor_datum;
  std::function<Morphism(const Object&)> left_unitor_inverse_datum;
  /// g_T(a, g_1) -> a, and its inverse.
  std::function<Morphism(const Object&)> right_unitor_datum;
  std::function<Morphism(const Object&)> right_unitor_inverse_datum;

  std::function<Morphism(const Object&, const Object&)> braiding_datum;
  std::function<Morphism(const Object&, const Object&)> braiding_witness;
  bool symmetric = false;

  std::optional<ProInternalHom> internal_hom;

  Object g(const Object& a, const Object& b) const { return FreydCategory::generators(protensor(a, b)); }
  Object r(const Object& a, const Object& b) const { return FreydCategory::relations(protensor(a, b)); }
  Morphism rho(const Object& a, const Object& b) const { return FreydCategory::relation(protensor(a, b)); }
};

/// The right exact monoidal structure on A(A) induced by a promonoidal structure on A.
class LiftedMonoidal {
 public:
  explicit LiftedMonoidal(PromonoidalStructure p) : p_(std::move(p)), f_(p_.freyd) {}

  const PromonoidalStructure& promonoidal() const { return p_; }
  const FreydCategory& category() const { return *f_; }

  /// Generators g_T(a,b); relations r_T(a,b) (+) g_T(a,r_b) (+) g_T(r_a,b).
  Object tensor_objects(const Object& a, const Object& b) const;
  std::vector<Object> relation_blocks(const Object& a, const Object& b) const;
  Morphism tensor_morphisms(const Morphism& f, const Morphism& g) const;
  Object unit_object() const { return p_.unit; }

  Morphism left_unitor(const Object& a) const;
  Morphism left_unitor_inverse(const Object& a) const;
  Morphism right_unitor(const Object& a) const;
  Morphism right_unitor_inverse(const Object& a) const;
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  Morphism braiding(const Object& a, const Object& b) const;

  /// Hom(x, C) for a generator x: generators g_H(x,c), relations r_H(x,c) (+) g_H(x,r_c).
  Object generator_hom(const Object& x, const Object& c) const;
  /// The induced map Hom(a, C) -> Hom(a', C') for alpha : a' -> a in A and gamma : C -> C'.
  Morphism generator_hom_morphism(const Morphism& alpha, const Morphism& gamma) const;
  /// Hom(rho_a, C) : Hom(a, C) -> Hom(r_a, C); its kernel is Hom(A, C).
  Morphism hom_relation_map(const Object& a, const Object& c) const;
  Object internal_hom(const Object& a, const Object& c) const;
  Morphism hom_morphisms(const Morphism& alpha, const Morphism& gamma) const;
  Morphism coevaluation(const Object& b, const Object& a) const;
  Morphism evaluation(const Object& a, const Object& c) const;

 private:
  const ProInternalHom& hom_data() const;

  PromonoidalStructure p_;
  std::shared_ptr<const FreydCategory> f_;
};

/// Assembles the lifted operations into one structure. When generator samples
/// are given, the restricted coherence identities are checked on their
/// embeddings first and PreconditionError names the first failing diagram.
MonoidalStructure lift_promonoidal(const PromonoidalStructure& p,
                                   const std::vector<Object>& generator_samples = {});

/// T(a, b) = emb(a (x) b) with zero relations.
PromonoidalStructure promonoidal_from_monoidal(const MonoidalStructure& m);

/// The same tensor on C^op; Ass and the unitors are replaced by their inverses.
MonoidalStructure opposite_monoidal(const MonoidalStructure& m);

/// (x) as a bifunctor C x C -> C.
MultilinearFunctor tensor_functor(const MonoidalStructure& m);

/// T as a bifunctor A x A -> A(A).
MultilinearFunctor protensor_functor(const PromonoidalStructure& p);

}  // namespace fpcat
