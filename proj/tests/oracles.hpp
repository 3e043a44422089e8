// Independent reference computations for finitely generated abelian groups.
// Nothing here calls the library's normal forms.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "fpcat/presentation.hpp"

namespace oracle {

using fpcat::CanonicalForm;
using fpcat::Matrix;

/// Cyclic group orders; 0 stands for Z.
using Cyclic = std::vector<long>;

inline CanonicalForm from_cyclic(const Cyclic& orders) {
  CanonicalForm c;
  std::map<long, std::vector<long>> powers;
  for (long n : orders) {
    if (n == 0) {
      ++c.free_rank;
      continue;
    }
    n = std::abs(n);
    for (long p = 2; p * p <= n; ++p) {
      long q = 1;
      while (n % p == 0) n /= p, q *= p;
      if (q > 1) powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t width = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end());
    width = std::max(width, qs.size());
  }
  std::vector<long> factors(width, 1);
  for (auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) factors[width - qs.size() + i] *= qs[i];
  for (long d : factors) c.torsion.push_back(d);
  return c;
}

inline Cyclic to_cyclic(const CanonicalForm& c) {
  Cyclic out(c.free_rank, 0);
  for (const auto& d : c.torsion) out.push_back(d.get_si());
  return out;
}

inline long tensor_cyclic(long a, long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return std::gcd(a, b);
}

inline long hom_cyclic(long a, long b) {
  if (a == 0) return b;
  if (b == 0) return 1;
  return std::gcd(a, b);
}

inline CanonicalForm pairwise(const CanonicalForm& m, const CanonicalForm& n, long (*op)(long, long)) {
  Cyclic out;
  for (long a : to_cyclic(m))
    for (long b : to_cyclic(n)) out.push_back(op(a, b));
  return from_cyclic(out);
}

/// M (x) N from the decompositions of M and N.
inline CanonicalForm tensor(const CanonicalForm& m, const CanonicalForm& n) { return pairwise(m, n, tensor_cyclic); }
/// Hom(M, N) from the decompositions of M and N.
inline CanonicalForm hom(const CanonicalForm& m, const CanonicalForm& n) { return pairwise(m, n, hom_cyclic); }

/// Determinant by cofactor expansion; fine for the tiny minors used here.
inline mpz_class det(const std::vector<std::vector<mpz_class>>& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    mpz_class term = a[0][j] * det(minor);
    total += j % 2 ? -term : term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors of coker(rel) over Z from the gcds of k x k minors.
inline CanonicalForm by_minors(const Matrix& rel) {
  std::size_t m = rel.rows(), n = rel.cols();
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    mpz_class g = 0;
    subsets(m, k, [&](const std::vector<std::size_t>& rows) {
      subsets(n, k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = rel(rows[i], cols[j]).get_num();
        mpz_class d = det(a);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  CanonicalForm c;
  c.free_rank = n - (divisors.size() - 1);
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    mpz_class d = divisors[k] / divisors[k - 1];
    if (d != 1) c.torsion.push_back(d);
  }
  return c;
}

/// Invariant factors of coker(rel) over Z by plain pivoting on the smallest entry.
inline CanonicalForm by_elimination(const Matrix& rel) {
  std::size_t m = rel.rows(), n = rel.cols();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rel(i, j).get_num();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == m) break;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
      if (clean) break;
    }
    if (t >= m || t >= n || a[t][t] == 0) break;
  }
  CanonicalForm c;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (a[i][i] == 0) break;
    ++rank;
    mpz_class d = abs(a[i][i]);
    if (d != 1) c.torsion.push_back(d);
  }
  c.free_rank = n - rank;
  return c;
}

/// Relations of M (x) N: rho_M (x) I and I (x) rho_N stacked.
inline Matrix classical_tensor_presentation(const Matrix& a, const Matrix& b) {
  const fpcat::Ring& ring = a.ring();
  return fpcat::stack(fpcat::kronecker(a, Matrix::identity(ring, b.cols())),
                      fpcat::kronecker(Matrix::identity(ring, a.cols()), b));
}

}  // namespace oracle
