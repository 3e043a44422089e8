#pragma once

#include "fpcat/freyd.hpp"

#include <functional>

namespace fpcat {

/// A functor A_1 x ... x A_n -> B, additive in each slot, given by its action.
struct MultilinearFunctor {
  std::vector<CategoryPtr> sources;
  CategoryPtr target;
  std::function<Object(const std::vector<Object>&)> on_objects;
  std::function<Morphism(const std::vector<Morphism>&)> on_morphisms;

  std::size_t arity() const { return sources.size(); }
  Object operator()(const std::vector<Object>& xs) const;
  Morphism operator()(const std::vector<Morphism>& fs) const;
};

/// nu : F => G, one component F(a) -> G(a) per object tuple.
struct NaturalTransformation {
  MultilinearFunctor source;
  MultilinearFunctor target;
  std::function<Morphism(const std::vector<Object>&)> component;

  Morphism operator()(const std::vector<Object>& xs) const { return component(xs); }
};

/// Freyd categories over the sources of a functor, built in the same order.
std::vector<std::shared_ptr<const FreydCategory>> freyd_sources(const MultilinearFunctor& f);

/// The column (+)_j F(a_1, .., r_{a_j}, .., a_n) -> F(a) whose cokernel is F^(A).
Morphism relation_column(const MultilinearFunctor& f, const std::vector<Object>& freyd_objects);

/// F^ on A(A_1) x ... x A(A_n). The target of f must have cokernels.
MultilinearFunctor extend_functor(const MultilinearFunctor& f,
                                  const std::vector<std::shared_ptr<const FreydCategory>>& freyds);
MultilinearFunctor extend_functor(const MultilinearFunctor& f);

/// nu^ : F^ => G^; the extensions must come from nu.source and nu.target.
NaturalTransformation extend_nat_trans(const NaturalTransformation& nu, const MultilinearFunctor& f_hat,
                                       const MultilinearFunctor& g_hat);

/// G o (emb x ... x emb).
MultilinearFunctor restrict_functor(const MultilinearFunctor& g,
                                    const std::vector<std::shared_ptr<const FreydCategory>>& freyds);

/// F => F^ o emb, componentwise the cokernel projection F(a) -> F^(emb a).
NaturalTransformation embedding_comparison(const MultilinearFunctor& f,
                                           const std::vector<std::shared_ptr<const FreydCategory>>& freyds);

/// extend(restrict G) => G, induced by G on the epimorphisms emb(a_j) -> A_j.
/// G must be defined on the given Freyd categories.
NaturalTransformation restriction_comparison(const MultilinearFunctor& g,
                                             const std::vector<std::shared_ptr<const FreydCategory>>& freyds);

/// Inverse of an isomorphism phi, found as the colift of the identity along phi.
/// Throws InvariantViolation if phi is not invertible.
Morphism inverse_of(const Category& c, const Morphism& phi);

/// Exactness of  (+)_j F(.., b_j, ..) -> F(a) -> F(coker alpha) -> 0  for the tuple
/// alpha_j : b_j -> a_j. The target of f needs kernels and cokernels; the sources need cokernels.
bool check_right_exactness(const MultilinearFunctor& f, const std::vector<Morphism>& alphas,
                           std::string* failure = nullptr);

/// F(m) * nu_y = nu_x * G(m) for the tuple m_j : x_j -> y_j.
bool naturality_square_commutes(const NaturalTransformation& nu, const std::vector<Morphism>& ms);

}  // namespace fpcat
