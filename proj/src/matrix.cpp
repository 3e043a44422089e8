#include "fpcat/matrix.hpp"

#include <sstream>

namespace fpcat {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  for (auto& e : entries_) e = ring_.normalize(e);
}

Matrix Matrix::from_rows(Ring ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("ragged matrix literal");
    for (long v : row) entries.emplace_back(v);
  }
  return Matrix(std::move(ring), rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_rows(Ring ring, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(ring), rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
  entries_[i * cols_ + j] = ring_.normalize(value);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix n(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) n.entries_[k] = ring_.normalize(-entries_[k]);
  return n;
}

Matrix Matrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.entries_[i * nc + j] = (*this)(r0 + i, c0 + j);
  return b;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  return os << "](" << m.rows() << "x" << m.cols() << " over " << m.ring().name() << ")";
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<Scalar> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  return Matrix(a.ring(), a.rows(), b.cols(), std::move(out));
}

namespace {
void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch");
}
}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  std::vector<Scalar> out(a.entries());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.entries()[k];
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_sub");
  std::vector<Scalar> out(a.entries());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.entries()[k];
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix scale(const Scalar& c, const Matrix& a) {
  std::vector<Scalar> out(a.entries());
  for (auto& e : out) e *= c;
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix stack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("stack of no blocks");
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_ring(b.ring(), blocks.front().ring());
    if (b.cols() != cols) throw DimensionError("stack: column counts differ");
    rows += b.rows();
  }
  std::vector<Scalar> out;
  out.reserve(rows * cols);
  for (const auto& b : blocks) out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Matrix(blocks.front().ring(), rows, cols, std::move(out));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  const Matrix parts[] = {top, bottom};
  return stack(parts);
}

Matrix augment(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("augment of no blocks");
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_same_ring(b.ring(), blocks.front().ring());
    if (b.rows() != rows) throw DimensionError("augment: row counts differ");
    cols += b.cols();
  }
  std::vector<Scalar> entries(rows * cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) entries[i * cols + offset + j] = b(i, j);
    offset += b.cols();
  }
  return Matrix(blocks.front().ring(), rows, cols, std::move(entries));
}

Matrix augment(const Matrix& left, const Matrix& right) {
  const Matrix parts[] = {left, right};
  return augment(parts);
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("block_diagonal of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_ring(b.ring(), blocks.front().ring());
    rows += b.rows();
    cols += b.cols();
  }
  std::vector<Scalar> entries(rows * cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) entries[(r0 + i) * cols + c0 + j] = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return Matrix(blocks.front().ring(), rows, cols, std::move(entries));
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  std::vector<Scalar> entries(rows * cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          entries[(i * b.rows() + k) * cols + j * b.cols() + l] = aij * b(k, l);
    }
  return Matrix(a.ring(), rows, cols, std::move(entries));
}

}  // namespace fpcat
