#pragma once

#include <string>
#include <vector>

#include "wedgekit/combinadics.hpp"
#include "wedgekit/numeric.hpp"

namespace wedgekit {

inline constexpr Count default_component_cap = 1'000'000;

/// Element of R^C(n,k) produced by the exterior map.
///
/// Component ordering convention ("paper-reversed"): with C = C(n,k) and r
/// the 1-based lex rank of a column subset i, component C - r(i) + 1 holds
/// (-1)^(C - r(i)) * det(U_i). to_plucker() converts to the unsigned
/// ascending-lex coordinate vector.
template <typename Scalar>
struct WedgeVector {
  int n = 0;
  int k = 0;
  Vector<Scalar> components;

  static constexpr const char* convention = "paper-reversed";
};

namespace detail {

template <typename Derived>
void require_factor_matrix(const Eigen::MatrixBase<Derived>& rows) {
  if (rows.rows() < 1 || rows.cols() < 1) {
    throw DomainError("factor matrix must be non-empty");
  }
}

}  // namespace detail

/// Generalized vector product of the n-1 rows of an (n-1) x n matrix:
/// sum over k of (-1)^(1+k) det(X_k) e_k, X_k the matrix with column k
/// removed. Requires n >= 2.
template <typename Derived>
Vector<typename Derived::Scalar> cross(const Eigen::MatrixBase<Derived>& rows) {
  using Scalar = typename Derived::Scalar;
  detail::require_factor_matrix(rows);
  const Eigen::Index n = rows.cols();
  if (n < 2 || rows.rows() != n - 1) {
    throw DomainError("cross: expected n-1 factors of dimension n with n >= 2, got " +
                      std::to_string(rows.rows()) + " factors of dimension " +
                      std::to_string(n));
  }
  const Matrix<Scalar> m = rows;
  Vector<Scalar> out(n);
  for (int k = 1; k <= n; ++k) {
    const Scalar d = det(delete_column(m, k));
    out(k - 1) = (k % 2 == 1) ? d : -d;
  }
  return out;
}

template <typename Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& rows) {
  if (rows.empty()) throw DomainError("factor list is empty");
  const Eigen::Index n = rows.front().size();
  Matrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw DomainError("factors must share one dimension");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

template <typename Scalar>
Vector<Scalar> cross(const std::vector<Vector<Scalar>>& rows) {
  return cross(stack_rows(rows));
}

/// Exterior product of the k rows of a k x n matrix, 1 <= k <= n. Each of
/// the C(n,k) components is an independently computed signed maximal minor,
/// placed per the paper-reversed convention above.
template <typename Derived>
WedgeVector<typename Derived::Scalar> wedge(const Eigen::MatrixBase<Derived>& rows,
                                            Count cap = default_component_cap) {
  using Scalar = typename Derived::Scalar;
  detail::require_factor_matrix(rows);
  const int k = static_cast<int>(rows.rows());
  const int n = static_cast<int>(rows.cols());
  if (k > n) {
    throw DomainError("wedge: more factors than dimensions (k = " + std::to_string(k) +
                      " > n = " + std::to_string(n) + ")");
  }
  const Count c = binomial(n, k);
  if (c > cap) {
    throw CapacityError("wedge: C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " +
                        std::to_string(c) + " components exceed the cap of " +
                        std::to_string(cap));
  }

  const Matrix<Scalar> u = rows;
  WedgeVector<Scalar> w{n, k, Vector<Scalar>(static_cast<Eigen::Index>(c))};

  // Walk the subsets in lex order; r is the running rank.
  std::vector<int> cur(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) cur[static_cast<size_t>(j)] = j;
  Count r = 1;
  while (true) {
    Matrix<Scalar> sub(k, k);
    for (int j = 0; j < k; ++j) sub.col(j) = u.col(cur[static_cast<size_t>(j)]);
    const Scalar d = det(sub);
    const Count pos = c - r;  // 0-based form of C - r + 1
    w.components(static_cast<Eigen::Index>(pos)) = ((c - r) % 2 == 0) ? d : -d;

    int j = k - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++cur[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t) {
      cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
    }
    ++r;
  }
  return w;
}

template <typename Scalar>
WedgeVector<Scalar> wedge(const std::vector<Vector<Scalar>>& rows,
                          Count cap = default_component_cap) {
  return wedge(stack_rows(rows), cap);
}

/// k = 1 exterior product in even dimension n = 2p, written out directly:
/// (u_2p, -u_(2p-1), ..., u_2, -u_1). Orthogonal to u.
template <typename Scalar>
WedgeVector<Scalar> wedge_k1(const Vector<Scalar>& u) {
  const int n = static_cast<int>(u.size());
  if (n < 2 || n % 2 != 0) {
    throw DomainError("wedge_k1: requires an even dimension, got n = " + std::to_string(n));
  }
  WedgeVector<Scalar> w{n, 1, Vector<Scalar>(n)};
  for (int j = 0; j < n; ++j) {
    const Scalar& e = u(n - 1 - j);
    w.components(j) = (j % 2 == 0) ? e : -e;
  }
  return w;
}

/// k = n specialization: the single wedge component, equal to det(U).
template <typename Derived>
typename Derived::Scalar det_via_wedge(const Eigen::MatrixBase<Derived>& u) {
  if (u.rows() != u.cols()) throw DomainError("det_via_wedge: matrix must be square");
  return wedge(u).components(0);
}

/// Unsigned ascending-lex coordinates: p[r(i)] = det(U_i). Strips the
/// paper-reversed convention's sign and order reversal.
template <typename Scalar>
Vector<Scalar> to_plucker(const WedgeVector<Scalar>& w) {
  const Eigen::Index c = w.components.size();
  Vector<Scalar> p(c);
  for (Eigen::Index r = 1; r <= c; ++r) {
    const Scalar& comp = w.components(c - r);
    p(r - 1) = ((c - r) % 2 == 0) ? comp : -comp;
  }
  return p;
}

/// Inverse of to_plucker; exact round trip.
template <typename Scalar>
WedgeVector<Scalar> from_plucker(const Vector<Scalar>& p, int n, int k) {
  if (k < 1 || k > n) throw DomainError("from_plucker: requires 1 <= k <= n");
  const Count c = binomial(n, k);
  if (p.size() != static_cast<Eigen::Index>(c)) {
    throw DomainError("from_plucker: expected " + std::to_string(c) + " coordinates");
  }
  WedgeVector<Scalar> w{n, k, Vector<Scalar>(p.size())};
  for (Eigen::Index r = 1; r <= p.size(); ++r) {
    const Eigen::Index pos = p.size() - r;
    w.components(pos) = (pos % 2 == 0) ? p(r - 1) : -p(r - 1);
  }
  return w;
}

}  // namespace wedgekit
