#pragma once

#include <cstdint>
#include <random>

#include "fpcat/freyd.hpp"
#include "fpcat/rows.hpp"

namespace fpcat {

/// Seeded generator of matrices, presentations and morphisms over Rows_R.
class Sampler {
 public:
  Sampler(std::shared_ptr<const FreydCategory> freyd, std::uint64_t seed);

  const FreydCategory& freyd() const { return *freyd_; }
  const RowsCategory& rows() const { return *rows_; }

  long uniform(long lo, long hi);
  /// Entries drawn uniformly from [lo, hi], then reduced into the ring.
  Matrix matrix(std::size_t rows, std::size_t cols, long lo, long hi);

  /// A nonzero module with 1..max_generators generators and up to max_relations relations.
  /// Falls back to the free module when every draw presents zero.
  Object object(std::size_t max_generators, std::size_t max_relations, long lo, long hi);
  /// A random integer combination of hom_generators(source, target).
  Morphism morphism(const Object& source, const Object& target, long lo, long hi);
  /// A random datum from at least one generator into target; the source relations are chosen from the
  /// syzygies that make the datum well defined.
  Morphism morphism_into(const Object& target, std::size_t max_generators, std::size_t max_relations,
                         long lo, long hi);

 private:
  std::shared_ptr<const FreydCategory> freyd_;
  std::shared_ptr<const RowsCategory> rows_;
  std::mt19937_64 engine_;
};

/// Data X : g_S -> g_T spanning the morphisms S -> T of A(Rows_R), read off the
/// syzygies of rho_S X = W rho_T.
std::vector<Matrix> hom_generators(const RowsCategory& rows, const Object& source, const Object& target);

}  // namespace fpcat
