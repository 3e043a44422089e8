#pragma once

#include "fpcat/monoidal.hpp"
#include "fpcat/rows.hpp"

namespace fpcat {

/// x_i (x) y_j  |->  y_j (x) x_i : row i*b + j has its 1 in column j*a + i.
Matrix commutation_matrix(const Ring& ring, std::size_t a, std::size_t b);
/// b -> Hom(a, b (x) a), x_k |-> sum_i E_{i,(k,i)}.
Matrix coevaluation_matrix(const Ring& ring, std::size_t b, std::size_t a);
/// Hom(a, c) (x) a -> c, E_{ij} (x) e_l |-> [i = l] f_j.
Matrix evaluation_matrix(const Ring& ring, std::size_t a, std::size_t c);

/// The closed symmetric monoidal structure (x)_R on Rows_R: rank m (x) rank n = rank mn,
/// morphisms tensor by the Kronecker product, and Hom(a, c) = rank ac.
MonoidalStructure kronecker_monoidal(const std::shared_ptr<const RowsCategory>& rows);
MonoidalStructure kronecker_monoidal(const Ring& ring);

/// The same structure read as a promonoidal structure with values emb(rank mn).
PromonoidalStructure kronecker_promonoidal(const Ring& ring);

}  // namespace fpcat
