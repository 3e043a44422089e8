#pragma once

#include "fpcat/monoidal.hpp"

namespace fpcat {

/// The free abelian category A(A(A^op)^op) on A with the monoidal structure
/// obtained by lifting twice.
struct FreeAbelianMonoidal {
  CategoryPtr base;                            ///< A
  MonoidalStructure base_monoidal;             ///< on A
  CategoryPtr base_op;                         ///< A^op
  std::shared_ptr<const FreydCategory> inner;  ///< A(A^op)
  CategoryPtr inner_op;                        ///< A(A^op)^op
  std::shared_ptr<const FreydCategory> outer;  ///< A(A(A^op)^op)
  MonoidalStructure inner_monoidal;            ///< on A(A^op)
  MonoidalStructure monoidal;                  ///< on A(A(A^op)^op)

  /// x |-> emb(emb(x)).
  Object embed(const Object& x) const;
  Morphism embed(const Morphism& f) const;
};

/// Runs the four steps: read the structure on A^op, lift it to A(A^op), read
/// the result on A(A^op)^op, lift again. Generator samples, when given, are
/// used for the restricted coherence checks at both lifts.
FreeAbelianMonoidal free_abelian_monoidal(const MonoidalStructure& base,
                                          const std::vector<Object>& generator_samples = {});

/// emb(x) (x) emb(y) and emb(x (x) y) agree as objects.
bool embedding_compatible(const FreeAbelianMonoidal& fa, const Object& x, const Object& y);
/// emb(f) (x) emb(g) equals emb(f (x) g).
bool embedding_compatible(const FreeAbelianMonoidal& fa, const Morphism& f, const Morphism& g);

/// Up to count small objects of the outer category over A = Rows_R: embedded
/// ranks 1 and 0 first, then one object per pair of small objects of A(A^op),
/// related by the first datum in {2, 1, -1, 0} that is well defined.
std::vector<Object> free_abelian_samples(const FreeAbelianMonoidal& fa, std::size_t count);

}  // namespace fpcat
