#pragma once

#include <string>

#include "wedgekit/numeric.hpp"
#include "wedgekit/wedge.hpp"

namespace wedgekit {

enum class Symmetry { palindromic, antipalindromic, neither };

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::palindromic: return "palindromic";
    case Symmetry::antipalindromic: return "antipalindromic";
    default: return "neither";
  }
}

/// +1 or -1, as produced by the closed-form parity rules.
class SignParity {
 public:
  static SignParity from_exponent(long e) { return SignParity(e % 2 == 0 ? 1 : -1); }
  static SignParity plus() { return SignParity(1); }
  static SignParity minus() { return SignParity(-1); }

  int value() const { return v_; }

  template <typename Scalar>
  Scalar apply(const Scalar& x) const {
    return v_ > 0 ? x : -x;
  }

  friend bool operator==(const SignParity&, const SignParity&) = default;

 private:
  explicit SignParity(int v) : v_(v) {}
  int v_;
};

/// Column-order reversal: entry (i, j) of the result is entry (i, n-j+1).
/// Equal to right multiplication by the exchange matrix, applied here as an
/// index permutation.
template <typename Derived>
Matrix<typename Derived::Scalar> reverse_matrix(const Eigen::MatrixBase<Derived>& m) {
  return m.rowwise().reverse();
}

template <typename Scalar>
Vector<Scalar> reverse_vector(const Vector<Scalar>& v) {
  return v.reverse();
}

/// The exchange matrix J_n: the identity with columns reversed. Materialized
/// only where the explicit matrix is wanted; reversal itself never builds it.
template <typename Scalar>
Matrix<Scalar> exchange_matrix(int n) {
  if (n < 1) throw DomainError("exchange_matrix: requires n >= 1");
  Matrix<Scalar> j(n, n);
  j.setZero();
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = Scalar(1);
  return j;
}

/// det(J_n) in closed form: (-1)^(n/2) for n even, (-1)^((n+3)/2) for n odd.
inline SignParity exchange_det(int n) {
  if (n < 1) throw DomainError("exchange_det: requires n >= 1");
  if (n % 2 == 0) return SignParity::from_exponent(n / 2);
  return SignParity::from_exponent((n + 3) / 2);
}

/// Sign relating the cross product of reversed factors to the reversed
/// cross product: (-1)^(3n/2) for n even, (-1)^((3n+1)/2) for n odd.
inline SignParity prop3_sign(int n) {
  if (n < 2) throw DomainError("prop3_sign: requires n >= 2");
  if (n % 2 == 0) return SignParity::from_exponent(3L * n / 2);
  return SignParity::from_exponent((3L * n + 1) / 2);
}

/// Palindromic: equal to its reversing. Antipalindromic: equal to the
/// negated reversing. The zero matrix satisfies both and is reported
/// palindromic. A compile-time column vector is classified as the
/// single-row case, i.e. by entry order.
template <typename Derived>
Symmetry classify(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> rev;
  if constexpr (Derived::ColsAtCompileTime == 1) {
    rev = m.reverse();
  } else {
    rev = reverse_matrix(m);
  }
  if (matrix_equal(rev, m)) return Symmetry::palindromic;
  if (matrix_equal(rev, (-m).eval())) return Symmetry::antipalindromic;
  return Symmetry::neither;
}

/// Common value of delete_column(reverse(M), k) and
/// reverse(delete_column(M, n-k+1)) for an (n-1) x n matrix. The equality is
/// asserted before returning.
template <typename Derived>
Matrix<typename Derived::Scalar> reversed_deleted_column(const Eigen::MatrixBase<Derived>& m,
                                                         int k) {
  const Eigen::Index n = m.cols();
  if (m.rows() != n - 1) {
    throw DomainError("reversed_deleted_column: expected an (n-1) x n matrix");
  }
  if (k < 1 || k > n) {
    throw DomainError("reversed_deleted_column: column " + std::to_string(k) +
                      " outside 1.." + std::to_string(n));
  }
  const auto lhs = delete_column(reverse_matrix(m), k);
  const auto rhs = reverse_matrix(delete_column(m, static_cast<int>(n) - k + 1));
  if (!matrix_equal(lhs, rhs)) {
    throw InternalError("reversed_deleted_column: the two evaluation orders disagree");
  }
  return lhs;
}

/// Cross product of n-1 vectors that are all palindromic or all
/// antipalindromic, n >= 4. The result vanishes; a nonzero result is an
/// internal bug.
template <typename Scalar>
Vector<Scalar> palindromic_cross_check(const Matrix<Scalar>& rows) {
  const Eigen::Index n = rows.cols();
  if (n < 4 || rows.rows() != n - 1) {
    throw DomainError("palindromic_cross_check: expected n-1 vectors of dimension n >= 4");
  }
  int palindromic = 0;
  int antipalindromic = 0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    switch (classify(rows.row(i))) {
      case Symmetry::palindromic: ++palindromic; break;
      case Symmetry::antipalindromic: ++antipalindromic; break;
      default:
        throw DomainError("palindromic_cross_check: row " + std::to_string(i + 1) +
                          " is neither palindromic nor antipalindromic");
    }
  }
  if (palindromic != rows.rows() && antipalindromic != rows.rows()) {
    throw DomainError("palindromic_cross_check: rows must be uniformly palindromic or "
                      "uniformly antipalindromic");
  }
  Vector<Scalar> c = cross(rows);
  if (!is_zero_matrix(c)) {
    throw InternalError("palindromic_cross_check: cross product did not vanish");
  }
  return c;
}

}  // namespace wedgekit
