#include "fpcat/normal_form.hpp"

#include <algorithm>
#include <utility>

namespace fpcat {

namespace {

using IntRow = std::vector<mpz_class>;
using IntRows = std::vector<IntRow>;

IntRows to_int_rows(const Matrix& m) {
  IntRows rows(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& e = m(i, j);
      if (e.get_den() != 1) throw RingError("integer algorithm applied to non-integer entry");
      rows[i][j] = e.get_num();
    }
  return rows;
}

Matrix from_int_rows(const Ring& ring, const IntRows& rows, std::size_t cols) {
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows)
    for (const auto& e : row) entries.emplace_back(e);
  return Matrix(ring, rows.size(), cols, std::move(entries));
}

IntRows int_identity(std::size_t n) {
  IntRows id(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// x <- s*x + t*y, y <- p*x + q*y (simultaneously)
void combine_rows(IntRow& x, IntRow& y, const mpz_class& s, const mpz_class& t, const mpz_class& p,
                  const mpz_class& q) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    mpz_class nx = s * x[k] + t * y[k];
    mpz_class ny = p * x[k] + q * y[k];
    x[k] = std::move(nx);
    y[k] = std::move(ny);
  }
}

void axpy(IntRow& y, const mpz_class& a, const IntRow& x) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] -= a * x[k];
}

bool is_zero_row(const IntRow& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
}

struct IntHermite {
  IntRows h;
  IntRows u;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
};

IntHermite int_hnf(IntRows h, std::size_t cols) {
  const std::size_t m = h.size();
  IntHermite out{std::move(h), int_identity(m), {}};
  auto& H = out.h;
  auto& U = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H[i][c] == 0) continue;
      if (H[r][c] == 0) {
        std::swap(H[r], H[i]);
        std::swap(U[r], U[i]);
        continue;
      }
      mpz_class a = H[r][c], b = H[i][c], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_class ra = a / g, rb = b / g;
      combine_rows(H[r], H[i], s, t, -rb, ra);
      combine_rows(U[r], U[i], s, t, -rb, ra);
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      for (auto& v : H[r]) v = -v;
      for (auto& v : U[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
      if (q == 0) continue;
      axpy(H[i], q, H[r]);
      axpy(U[i], q, U[r]);
    }
    out.pivots.emplace_back(r, c);
    ++r;
  }
  return out;
}

// Solves y * H = b for a Hermite form given by its pivots; returns y * U.
std::optional<IntRows> int_solve_with(const IntHermite& herm, const IntRows& b, std::size_t k) {
  IntRows x;
  x.reserve(b.size());
  for (IntRow v : b) {
    IntRow y(k);
    for (auto [r, c] : herm.pivots) {
      if (v[c] == 0) continue;
      if (!mpz_divisible_p(v[c].get_mpz_t(), herm.h[r][c].get_mpz_t())) return std::nullopt;
      mpz_class q = v[c] / herm.h[r][c];
      axpy(v, q, herm.h[r]);
      y[r] = q;
    }
    if (!is_zero_row(v)) return std::nullopt;
    IntRow xr(k);
    for (std::size_t r = 0; r < k; ++r) {
      if (y[r] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) xr[j] += y[r] * herm.u[r][j];
    }
    x.push_back(std::move(xr));
  }
  return x;
}

// Over Z/n every question is asked of the integer lattice [a; n*I].
IntRows lift_with_modulus(const Matrix& a) {
  IntRows rows = to_int_rows(a);
  const mpz_class& n = a.ring().modulus();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntRow e(a.cols());
    e[j] = n;
    rows.push_back(std::move(e));
  }
  return rows;
}

// ---- rational Gauss-Jordan ----

using QRow = std::vector<Scalar>;

struct RationalEchelon {
  std::vector<QRow> h;
  std::vector<QRow> u;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

RationalEchelon rref(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RationalEchelon out;
  out.h.assign(m, QRow(n));
  out.u.assign(m, QRow(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.h[i][j] = a(i, j);
    out.u[i][i] = 1;
  }
  auto& H = out.h;
  auto& U = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && H[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(H[r], H[p]);
    std::swap(U[r], U[p]);
    Scalar inv = 1 / H[r][c];
    for (auto& v : H[r]) v *= inv;
    for (auto& v : U[r]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || H[i][c] == 0) continue;
      Scalar f = H[i][c];
      for (std::size_t k = 0; k < n; ++k) H[i][k] -= f * H[r][k];
      for (std::size_t k = 0; k < m; ++k) U[i][k] -= f * U[r][k];
    }
    out.pivots.emplace_back(r, c);
    ++r;
  }
  return out;
}

Matrix from_q_rows(const Ring& ring, const std::vector<QRow>& rows, std::size_t cols) {
  return Matrix::from_rows(ring, cols, rows);
}

void require_supported_shape_for_solve(const Matrix& a, const Matrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.cols())
    throw DimensionError("solve_left: a has " + std::to_string(a.cols()) + " columns, b has " +
                         std::to_string(b.cols()));
}

}  // namespace

HermiteResult hnf(const Matrix& m) {
  const Ring& ring = m.ring();
  switch (ring.kind()) {
    case Ring::Kind::Rationals: {
      auto e = rref(m);
      return {from_q_rows(ring, e.h, m.cols()), from_q_rows(ring, e.u, m.rows())};
    }
    case Ring::Kind::Integers: {
      auto e = int_hnf(to_int_rows(m), m.cols());
      return {from_int_rows(ring, e.h, m.cols()), from_int_rows(ring, e.u, m.rows())};
    }
    case Ring::Kind::IntegersMod: {
      auto e = int_hnf(lift_with_modulus(m), m.cols());
      IntRows h, u;
      for (auto [r, c] : e.pivots) {
        if (e.h[r][c] == ring.modulus()) continue;
        h.push_back(e.h[r]);
        u.emplace_back(e.u[r].begin(), e.u[r].begin() + static_cast<std::ptrdiff_t>(m.rows()));
      }
      return {from_int_rows(ring, h, m.cols()), from_int_rows(ring, u, m.rows())};
    }
  }
  throw RingError("hnf: unsupported ring");
}

SmithResult snf(const Matrix& m) {
  if (!m.ring().is_integers()) throw RingError("snf requires Z, got " + m.ring().name());
  const std::size_t rows = m.rows(), cols = m.cols();
  IntRows S = to_int_rows(m);
  IntRows U = int_identity(rows);
  IntRows V = int_identity(cols);

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : S) std::swap(r[a], r[b]);
    for (auto& r : V) std::swap(r[a], r[b]);
  };
  auto col_axpy = [&](std::size_t j, const mpz_class& q, std::size_t t) {
    for (auto& r : S) r[j] -= q * r[t];
    for (auto& r : V) r[j] -= q * r[t];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (S[i][j] != 0 && (bi == rows || abs(S[i][j]) < abs(S[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(S[t], S[bi]);
    std::swap(U[t], U[bi]);
    swap_cols(t, bj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), S[i][t].get_mpz_t(), S[t][t].get_mpz_t());
        axpy(S[i], q, S[t]);
        axpy(U[i], q, U[t]);
        if (S[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), S[t][j].get_mpz_t(), S[t][t].get_mpz_t());
        col_axpy(j, q, t);
        if (S[t][j] != 0) dirty = true;
      }
      if (dirty) {
        std::size_t ri = t, cj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (S[i][t] != 0 && abs(S[i][t]) < abs(S[ri][cj])) {
            ri = i;
            cj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S[t][j] != 0 && abs(S[t][j]) < abs(S[ri][cj])) {
            ri = t;
            cj = j;
          }
        std::swap(S[t], S[ri]);
        std::swap(U[t], U[ri]);
        swap_cols(t, cj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S[i][j].get_mpz_t(), S[t][t].get_mpz_t())) {
            for (std::size_t k = 0; k < cols; ++k) S[t][k] += S[i][k];
            for (std::size_t k = 0; k < rows; ++k) U[t][k] += U[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (S[t][t] < 0) {
      for (auto& v : S[t]) v = -v;
      for (auto& v : U[t]) v = -v;
    }
  }
  const Ring& ring = m.ring();
  return {from_int_rows(ring, S, cols), from_int_rows(ring, U, rows), from_int_rows(ring, V, cols)};
}

std::vector<mpz_class> elementary_divisors(const Matrix& m) {
  auto s = snf(m).s;
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) out.push_back(s(i, i).get_num());
  return out;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  require_supported_shape_for_solve(a, b);
  const Ring& ring = a.ring();
  const std::size_t k = a.rows();
  switch (ring.kind()) {
    case Ring::Kind::Integers: {
      auto herm = int_hnf(to_int_rows(a), a.cols());
      auto x = int_solve_with(herm, to_int_rows(b), k);
      if (!x) return std::nullopt;
      return from_int_rows(ring, *x, k);
    }
    case Ring::Kind::IntegersMod: {
      IntRows lifted = lift_with_modulus(a);
      auto herm = int_hnf(lifted, a.cols());
      auto x = int_solve_with(herm, to_int_rows(b), lifted.size());
      if (!x) return std::nullopt;
      for (auto& row : *x) row.resize(k);
      return from_int_rows(ring, *x, k);
    }
    case Ring::Kind::Rationals: {
      auto e = rref(a);
      std::vector<QRow> x;
      for (std::size_t bi = 0; bi < b.rows(); ++bi) {
        QRow v(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) v[j] = b(bi, j);
        QRow y(k);
        for (auto [r, c] : e.pivots) {
          if (v[c] == 0) continue;
          Scalar q = v[c];
          for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * e.h[r][j];
          y[r] = q;
        }
        if (std::any_of(v.begin(), v.end(), [](const Scalar& s) { return s != 0; }))
          return std::nullopt;
        QRow xr(k);
        for (std::size_t r = 0; r < k; ++r)
          if (y[r] != 0)
            for (std::size_t j = 0; j < k; ++j) xr[j] += y[r] * e.u[r][j];
        x.push_back(std::move(xr));
      }
      return from_q_rows(ring, x, k);
    }
  }
  throw RingError("solve_left: unsupported ring");
}

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  auto x = solve_left(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

Matrix row_syzygies(const Matrix& a) {
  const Ring& ring = a.ring();
  const std::size_t k = a.rows();
  switch (ring.kind()) {
    case Ring::Kind::Integers: {
      auto herm = int_hnf(to_int_rows(a), a.cols());
      IntRows syz(herm.u.begin() + static_cast<std::ptrdiff_t>(herm.pivots.size()), herm.u.end());
      return from_int_rows(ring, syz, k);
    }
    case Ring::Kind::IntegersMod: {
      IntRows lifted = lift_with_modulus(a);
      auto herm = int_hnf(lifted, a.cols());
      IntRows syz;
      for (std::size_t r = herm.pivots.size(); r < herm.u.size(); ++r) {
        IntRow row(herm.u[r].begin(), herm.u[r].begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& v : row) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ring.modulus().get_mpz_t());
        if (!is_zero_row(row)) syz.push_back(std::move(row));
      }
      return from_int_rows(ring, syz, k);
    }
    case Ring::Kind::Rationals: {
      auto e = rref(a);
      std::vector<QRow> syz(e.u.begin() + static_cast<std::ptrdiff_t>(e.pivots.size()), e.u.end());
      return from_q_rows(ring, syz, k);
    }
  }
  throw RingError("row_syzygies: unsupported ring");
}

Matrix column_syzygies(const Matrix& a) { return row_syzygies(a.transpose()).transpose(); }

}  // namespace fpcat
