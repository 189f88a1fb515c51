#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include "wedgekit/combinadics.hpp"
#include "wedgekit/error.hpp"
#include "wedgekit/types.hpp"

namespace wedgekit {

/// Fraction-free Bareiss elimination. Exact over any field scalar; every
/// division in the recurrence is exact, which bounds intermediate growth for
/// integer entries.
template <typename Scalar>
Scalar det_bareiss(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("det: matrix must be square");
  if (n == 0) return Scalar(1);

  int sign = 1;
  Scalar prev = Scalar(1);
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    if (m(p, p) == Scalar(0)) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = p + 1; i < n; ++i) {
        if (m(i, p) != Scalar(0)) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      m.row(p).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < n; ++i) {
      for (Eigen::Index j = p + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / prev;
      }
      m(i, p) = Scalar(0);
    }
    prev = m(p, p);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// Partial-pivot LU determinant for the float mode.
inline double det_lu(MatrixD m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("det: matrix must be square");
  if (n == 0) return 1.0;

  double det = 1.0;
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index pivot_row = p;
    double best = std::abs(m(p, p));
    for (Eigen::Index i = p + 1; i < n; ++i) {
      if (std::abs(m(i, p)) > best) {
        best = std::abs(m(i, p));
        pivot_row = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot_row != p) {
      m.row(p).swap(m.row(pivot_row));
      det = -det;
    }
    det *= m(p, p);
    for (Eigen::Index i = p + 1; i < n; ++i) {
      const double f = m(i, p) / m(p, p);
      for (Eigen::Index j = p + 1; j < n; ++j) m(i, j) -= f * m(p, j);
    }
  }
  return det;
}

/// Float singularity policy: a partial pivot whose magnitude falls below
/// float_pivot_rel times the largest Euclidean row norm marks the matrix
/// singular.
inline bool float_singular(MatrixD m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("float_singular: matrix must be square");
  const double threshold = float_pivot_rel * m.rowwise().norm().maxCoeff();
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index pivot_row = p;
    double best = std::abs(m(p, p));
    for (Eigen::Index i = p + 1; i < n; ++i) {
      if (std::abs(m(i, p)) > best) {
        best = std::abs(m(i, p));
        pivot_row = i;
      }
    }
    if (best < threshold || best == 0.0) return true;
    if (pivot_row != p) m.row(p).swap(m.row(pivot_row));
    for (Eigen::Index i = p + 1; i < n; ++i) {
      const double f = m(i, p) / m(p, p);
      for (Eigen::Index j = p + 1; j < n; ++j) m(i, j) -= f * m(p, j);
    }
  }
  return false;
}

/// Determinant in the scalar's own mode: Bareiss when exact, LU otherwise.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_floating_point_v<Scalar>) {
    return det_lu(m);
  } else {
    return det_bareiss<Scalar>(m);
  }
}

/// The k x k matrix whose j-th column is column s[j] of the k x n matrix u.
template <typename Derived>
Matrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& u,
                                              const IndexSet& s) {
  using Scalar = typename Derived::Scalar;
  if (s.ambient() != u.cols() || s.size() != u.rows()) {
    throw DomainError("minor_matrix: index set " + s.to_string() + " does not fit a " +
                      std::to_string(u.rows()) + "x" + std::to_string(u.cols()) + " matrix");
  }
  Matrix<Scalar> out(u.rows(), s.size());
  for (int j = 0; j < s.size(); ++j) out.col(j) = u.col(s.zero_based(j));
  return out;
}

/// Removes column k (1-based), keeping the remaining columns in order.
template <typename Derived>
Matrix<typename Derived::Scalar> delete_column(const Eigen::MatrixBase<Derived>& m, int k) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.cols();
  if (k < 1 || k > n) {
    throw DomainError("delete_column: column " + std::to_string(k) + " outside 1.." +
                      std::to_string(n));
  }
  Matrix<Scalar> out(m.rows(), n - 1);
  out.leftCols(k - 1) = m.leftCols(k - 1);
  out.rightCols(n - k) = m.rightCols(n - k);
  return out;
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dot(const Eigen::MatrixBase<DerivedA>& u,
                              const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "dot: operands must share one scalar mode");
  if (u.size() != v.size()) {
    throw DomainError("dot: dimension mismatch, " + std::to_string(u.size()) + " vs " +
                      std::to_string(v.size()));
  }
  Scalar acc = Scalar(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) acc += u(i) * v(i);
  return acc;
}

template <typename DerivedA, typename DerivedB>
bool matrix_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == Scalar(0))) return false;
    }
  }
  return true;
}

}  // namespace wedgekit
