#include "fpcat/sampling.hpp"

#include "fpcat/normal_form.hpp"

namespace fpcat {

namespace {
using F = FreydCategory;
using R = RowsCategory;
}  // namespace

std::vector<Matrix> hom_generators(const RowsCategory& rows, const Object& source, const Object& target) {
  const Ring& ring = rows.ring();
  const Matrix& rs = rows.matrix(F::relation(source));
  const Matrix& rt = rows.matrix(F::relation(target));
  std::size_t s = rs.cols(), t = rt.cols(), r = rs.rows();
  if (s == 0 || t == 0) return {};
  Matrix eq = stack(kronecker(rs.transpose(), Matrix::identity(ring, t)),
                    -kronecker(Matrix::identity(ring, r), rt));
  Matrix syz = row_syzygies(eq);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < syz.rows(); ++k) {
    Matrix x(ring, s, t);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < t; ++j) x.set(i, j, syz(k, i * t + j));
    if (!x.is_zero()) out.push_back(std::move(x));
  }
  return out;
}

Sampler::Sampler(std::shared_ptr<const FreydCategory> freyd, std::uint64_t seed)
    : freyd_(std::move(freyd)),
      rows_(std::dynamic_pointer_cast<const RowsCategory>(freyd_->base())),
      engine_(seed) {
  if (!rows_) throw PreconditionError("Sampler needs A(Rows_R)");
}

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Matrix Sampler::matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows_->ring(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, uniform(lo, hi));
  return m;
}

Object Sampler::object(std::size_t max_generators, std::size_t max_relations, long lo, long hi) {
  if (max_generators == 0) return freyd_->zero_object();
  auto g = static_cast<std::size_t>(uniform(1, static_cast<long>(max_generators)));
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto r = static_cast<std::size_t>(uniform(0, static_cast<long>(max_relations)));
    Matrix rel = matrix(r, g, lo, hi);
    if (!solve_left(rel, Matrix::identity(rows_->ring(), g)).has_value())
      return freyd_->object(rows_->morphism(std::move(rel)));
  }
  return freyd_->emb(rows_->object(g));
}

Morphism Sampler::morphism(const Object& source, const Object& target, long lo, long hi) {
  Matrix x(rows_->ring(), R::rank(F::generators(source)), R::rank(F::generators(target)));
  for (const auto& g : hom_generators(*rows_, source, target)) x = x + scale(uniform(lo, hi), g);
  return freyd_->morphism(source, target, rows_->morphism(std::move(x)));
}

Morphism Sampler::morphism_into(const Object& target, std::size_t max_generators, std::size_t max_relations,
                                long lo, long hi) {
  auto a = static_cast<std::size_t>(uniform(std::min<long>(1, max_generators), static_cast<long>(max_generators)));
  Matrix alpha = matrix(a, R::rank(F::generators(target)), lo, hi);
  Matrix syz = row_syzygies(stack(alpha, rows_->matrix(F::relation(target))));
  Matrix allowed = syz.col_range(0, a);
  Matrix rel(rows_->ring(), 0, a);
  if (allowed.rows() > 0) {
    auto r = static_cast<std::size_t>(uniform(0, static_cast<long>(max_relations)));
    rel = matrix(r, allowed.rows(), lo, hi) * allowed;
  }
  Object source = freyd_->object(rows_->morphism(std::move(rel)));
  return freyd_->morphism(source, target, rows_->morphism(std::move(alpha)));
}

}  // namespace fpcat
