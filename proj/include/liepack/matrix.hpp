#pragma once

#include <string>
#include <vector>

#include "liepack/rational.hpp"

namespace liepack {

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix int_identity(size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (size_t k = 0; k < n; ++k)
    m[k][k] = 1;
  return m;
}

inline IntMatrix int_mul(const IntMatrix &a, const IntMatrix &b) {
  size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Exact inverse of an integer matrix via rational Gauss-Jordan elimination.
/// Throws if the matrix is singular or the inverse is not integral (the
/// change-of-basis matrices here are unimodular, so that never happens).
inline IntMatrix int_inverse(const IntMatrix &m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero())
      ++piv;
    if (piv == n)
      throw InvalidParameter("singular matrix");
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < 2 * n; ++j)
      a[col][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero())
        continue;
      Rational f = a[i][col];
      for (size_t j = 0; j < 2 * n; ++j)
        a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix inv(n, std::vector<long long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!a[i][n + j].is_integer())
        throw InvalidParameter("inverse is not integral");
      inv[i][j] = a[i][n + j].num();
    }
  return inv;
}

inline std::string int_matrix_str(const IntMatrix &m) {
  std::string s;
  for (const auto &row : m) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j)
        s += " ";
      s += std::to_string(row[j]);
    }
    s += "\n";
  }
  return s;
}

} // namespace liepack
