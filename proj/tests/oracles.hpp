#pragma once

// Test-only oracles, deliberately naive and independent of the library's
// computation paths.

#include <random>
#include <vector>

#include "wedgekit/types.hpp"

namespace wedgekit::oracle {

// Laplace cofactor expansion along the first row. Exponential; sizes <= 6.
inline Rational det_cofactor(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  Rational acc(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    MatrixQ sub(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = m(i, c);
      }
    }
    const Rational term = m(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Pascal's triangle, row by row.
inline Count binomial_pascal(int n, int k) {
  std::vector<Count> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Count> next(static_cast<size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) {
      next[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

// Plain exact Gauss-Jordan on the augmented matrix. Requires nonsingular A.
inline VectorQ gaussian_solve(MatrixQ a, VectorQ b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index pivot = p;
    while (pivot < n && a(pivot, p) == Rational(0)) ++pivot;
    if (pivot == n) throw std::runtime_error("gaussian_solve: singular input");
    if (pivot != p) {
      a.row(p).swap(a.row(pivot));
      std::swap(b(p), b(pivot));
    }
    const Rational inv = Rational(1) / a(p, p);
    a.row(p) *= inv;
    b(p) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == p || a(i, p) == Rational(0)) continue;
      const Rational f = a(i, p);
      a.row(i) -= f * a.row(p);
      b(i) -= f * b(p);
    }
  }
  return b;
}

inline int digit(std::mt19937_64& rng) { return static_cast<int>(rng() % 19) - 9; }

inline MatrixQ random_matrix(std::mt19937_64& rng, int rows, int cols) {
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(digit(rng));
  }
  return m;
}

inline VectorQ random_vector(std::mt19937_64& rng, int n) {
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(digit(rng));
  return v;
}

}  // namespace wedgekit::oracle
