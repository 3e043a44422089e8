#include "fpcat/rows.hpp"

#include "fpcat/normal_form.hpp"

namespace fpcat {

bool RowsObject::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const RowsObject*>(&other);
  return o && o->rank == rank;
}

bool RowsMorphism::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const RowsMorphism*>(&other);
  return o && o->matrix == matrix;
}

Object RowsCategory::object(std::size_t rank) const {
  return Object(std::make_shared<RowsObject>(rank));
}

Morphism RowsCategory::morphism(Matrix m) const {
  require_same_ring(m.ring(), ring_);
  Object s = object(m.rows()), t = object(m.cols());
  return {s, t, std::make_shared<RowsMorphism>(std::move(m))};
}

Morphism RowsCategory::morphism(std::initializer_list<std::initializer_list<long>> rows) const {
  return morphism(Matrix::from_rows(ring_, rows));
}

const Matrix& RowsCategory::matrix(const Morphism& f) const {
  const Matrix& m = f.as<RowsMorphism>().matrix;
  if (!(m.ring() == ring_)) throw RingError("morphism over " + m.ring().name() + " in " + name());
  return m;
}

Capabilities RowsCategory::capabilities() const {
  Capabilities c;
  c.lifts = c.colifts = c.linear_systems = true;
  c.weak_kernels = c.weak_cokernels = true;
  return c;
}

Morphism RowsCategory::identity(const Object& a) const {
  return morphism(Matrix::identity(ring_, rank(a)));
}

Morphism RowsCategory::compose(const Morphism& f, const Morphism& g) const {
  require_composable(f, g);
  return morphism(matrix(f) * matrix(g));
}

Morphism RowsCategory::add(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g);
  return morphism(matrix(f) + matrix(g));
}

Morphism RowsCategory::negate(const Morphism& f) const { return morphism(-matrix(f)); }

Morphism RowsCategory::zero_morphism(const Object& source, const Object& target) const {
  return morphism(Matrix::zero(ring_, rank(source), rank(target)));
}

bool RowsCategory::is_equal(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g);
  return matrix(f) == matrix(g);
}

Object RowsCategory::direct_sum(const std::vector<Object>& summands) const {
  std::size_t total = 0;
  for (const auto& s : summands) total += rank(s);
  return object(total);
}

Morphism RowsCategory::injection(const std::vector<Object>& summands, std::size_t i) const {
  std::size_t offset = 0, total = 0;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (k < i) offset += rank(summands[k]);
    total += rank(summands[k]);
  }
  std::size_t r = rank(summands.at(i));
  Matrix m(ring_, r, total);
  for (std::size_t k = 0; k < r; ++k) m.set(k, offset + k, 1);
  return morphism(std::move(m));
}

Morphism RowsCategory::projection(const std::vector<Object>& summands, std::size_t i) const {
  return morphism(matrix(injection(summands, i)).transpose());
}

std::optional<Morphism> RowsCategory::lift(const Morphism& along, const Morphism& b) const {
  if (!(along.target == b.target)) throw PreconditionError("lift: targets differ");
  auto x = solve_left(matrix(along), matrix(b));
  if (!x) return std::nullopt;
  return morphism(std::move(*x));
}

std::optional<Morphism> RowsCategory::colift(const Morphism& along, const Morphism& b) const {
  if (!(along.source == b.source)) throw PreconditionError("colift: sources differ");
  auto x = solve_right(matrix(along), matrix(b));
  if (!x) return std::nullopt;
  return morphism(std::move(*x));
}

// vec_row(L X R) = vec_row(X) * (L^T (x) R) turns the system into one solve_left.
std::optional<std::vector<Morphism>> RowsCategory::solve(const LinearSystem& system) const {
  std::vector<std::size_t> row_offset, col_offset;
  std::size_t total_rows = 0, total_cols = 0;
  for (const auto& u : system.unknowns) {
    row_offset.push_back(total_rows);
    total_rows += rank(u.source) * rank(u.target);
  }
  for (const auto& e : system.equations) {
    col_offset.push_back(total_cols);
    total_cols += rank(e.rhs.source) * rank(e.rhs.target);
  }
  std::vector<Scalar> big(total_rows * total_cols);
  Matrix rhs(ring_, 1, total_cols);
  for (std::size_t q = 0; q < system.equations.size(); ++q) {
    const auto& eq = system.equations[q];
    for (const auto& term : eq.terms) {
      const auto& u = system.unknowns.at(term.unknown);
      if (!(term.left.source == eq.rhs.source) || !(term.left.target == u.source) ||
          !(term.right.source == u.target) || !(term.right.target == eq.rhs.target))
        throw PreconditionError("linear system term does not typecheck");
      Matrix k = kronecker(matrix(term.left).transpose(), matrix(term.right));
      for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
          big[(row_offset[term.unknown] + i) * total_cols + col_offset[q] + j] += k(i, j);
    }
    const Matrix& b = matrix(eq.rhs);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) rhs.set(0, col_offset[q] + i * b.cols() + j, b(i, j));
  }
  auto x = solve_left(Matrix(ring_, total_rows, total_cols, std::move(big)), rhs);
  if (!x) return std::nullopt;
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < system.unknowns.size(); ++k) {
    std::size_t m = rank(system.unknowns[k].source), n = rank(system.unknowns[k].target);
    Matrix xk(ring_, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) xk.set(i, j, (*x)(0, row_offset[k] + i * n + j));
    out.push_back(morphism(std::move(xk)));
  }
  return out;
}

Morphism RowsCategory::weak_kernel_embedding(const Morphism& f) const {
  return morphism(row_syzygies(matrix(f)));
}

Morphism RowsCategory::weak_cokernel_projection(const Morphism& f) const {
  return morphism(column_syzygies(matrix(f)));
}

std::shared_ptr<const RowsCategory> rows_category(const Ring& ring) {
  return std::make_shared<RowsCategory>(ring);
}

}  // namespace fpcat
