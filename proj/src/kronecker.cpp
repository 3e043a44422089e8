#include "fpcat/kronecker.hpp"

namespace fpcat {

Matrix commutation_matrix(const Ring& ring, std::size_t a, std::size_t b) {
  Matrix m(ring, a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) m.set(i * b + j, j * a + i, 1);
  return m;
}

Matrix coevaluation_matrix(const Ring& ring, std::size_t b, std::size_t a) {
  Matrix m(ring, b, a * b * a);
  for (std::size_t k = 0; k < b; ++k)
    for (std::size_t i = 0; i < a; ++i) m.set(k, i * (b * a) + k * a + i, 1);
  return m;
}

Matrix evaluation_matrix(const Ring& ring, std::size_t a, std::size_t c) {
  Matrix m(ring, a * c * a, c);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set((i * c + j) * a + i, j, 1);
  return m;
}

MonoidalStructure kronecker_monoidal(const std::shared_ptr<const RowsCategory>& rows) {
  using R = RowsCategory;
  const Ring ring = rows->ring();
  MonoidalStructure m;
  m.category = rows;
  m.tensor = [rows](const Object& a, const Object& b) { return rows->object(R::rank(a) * R::rank(b)); };
  m.tensor_morphisms = [rows](const Morphism& f, const Morphism& g) {
    return rows->morphism(kronecker(rows->matrix(f), rows->matrix(g)));
  };
  m.unit = rows->object(1);
  auto id3 = [rows](const Object& a, const Object& b, const Object& c) {
    return rows->identity(rows->object(R::rank(a) * R::rank(b) * R::rank(c)));
  };
  auto id1 = [rows](const Object& a) { return rows->identity(a); };
  m.associator = id3;
  m.associator_inverse = id3;
  m.left_unitor = m.left_unitor_inverse = m.right_unitor = m.right_unitor_inverse = id1;
  m.braiding = [rows, ring](const Object& a, const Object& b) {
    return rows->morphism(commutation_matrix(ring, R::rank(a), R::rank(b)));
  };
  m.symmetric = true;

  ClosedStructure c;
  c.internal_hom = [rows](const Object& a, const Object& x) { return rows->object(R::rank(a) * R::rank(x)); };
  c.hom_morphisms = [rows](const Morphism& alpha, const Morphism& gamma) {
    return rows->morphism(kronecker(rows->matrix(alpha).transpose(), rows->matrix(gamma)));
  };
  c.coevaluation = [rows, ring](const Object& b, const Object& a) {
    return rows->morphism(coevaluation_matrix(ring, R::rank(b), R::rank(a)));
  };
  c.evaluation = [rows, ring](const Object& a, const Object& x) {
    return rows->morphism(evaluation_matrix(ring, R::rank(a), R::rank(x)));
  };
  m.closed = c;
  return m;
}

MonoidalStructure kronecker_monoidal(const Ring& ring) { return kronecker_monoidal(rows_category(ring)); }

PromonoidalStructure kronecker_promonoidal(const Ring& ring) {
  return promonoidal_from_monoidal(kronecker_monoidal(ring));
}

}  // namespace fpcat
