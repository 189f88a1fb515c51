#pragma once

#include <cstdio>
#include <string>
#include <type_traits>

#include "wedgekit/numeric.hpp"
#include "wedgekit/wedge.hpp"

namespace wedgekit {

/// Square system x_1 A_1 + ... + x_n A_n = B; column i of `coefficients`
/// is A_i.
template <typename Scalar>
class LinearSystem {
 public:
  LinearSystem(Matrix<Scalar> coefficients, Vector<Scalar> rhs)
      : a_(std::move(coefficients)), b_(std::move(rhs)) {
    if (a_.rows() != a_.cols()) {
      throw DomainError("LinearSystem: coefficient matrix must be square, got " +
                        std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()));
    }
    if (a_.rows() < 1) throw DomainError("LinearSystem: empty system");
    if (b_.size() != a_.rows()) {
      throw DomainError("LinearSystem: rhs dimension " + std::to_string(b_.size()) +
                        " does not match system size " + std::to_string(a_.rows()));
    }
  }

  int size() const { return static_cast<int>(a_.rows()); }
  const Matrix<Scalar>& coefficients() const { return a_; }
  Vector<Scalar> column(int i) const { return a_.col(i - 1); }  // 1-based
  const Vector<Scalar>& rhs() const { return b_; }

 private:
  Matrix<Scalar> a_;
  Vector<Scalar> b_;
};

namespace detail {

template <typename Scalar>
Scalar nonsingular_det(const LinearSystem<Scalar>& sys) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (float_singular(sys.coefficients())) {
      char threshold[32];
      std::snprintf(threshold, sizeof(threshold), "%g", float_pivot_rel);
      throw SingularSystemError("singular system",
                                "pivot below " + std::string(threshold) + " x max row norm");
    }
    return det(sys.coefficients());
  } else {
    const Scalar d = det(sys.coefficients());
    if (d == Scalar(0)) {
      throw SingularSystemError("singular system", "det(A) = 0");
    }
    return d;
  }
}

// Rows are the columns of A with column i left out, the factor list of the
// cross product in the quotient form.
template <typename Scalar>
Matrix<Scalar> factors_without(const LinearSystem<Scalar>& sys, int i) {
  const int n = sys.size();
  Matrix<Scalar> rows(n - 1, n);
  int r = 0;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    rows.row(r++) = sys.column(j).transpose();
  }
  return rows;
}

template <typename Scalar>
Scalar component_det_ratio(const LinearSystem<Scalar>& sys, int i, const Scalar& d) {
  Matrix<Scalar> numerator = sys.coefficients();
  numerator.col(i - 1) = sys.rhs();
  return det(numerator) / d;
}

}  // namespace detail

/// x_i by the determinant ratio det(A_1,...,B,...,A_n) / det(A).
template <typename Scalar>
Vector<Scalar> solve(const LinearSystem<Scalar>& sys) {
  const Scalar d = detail::nonsingular_det(sys);
  const int n = sys.size();
  Vector<Scalar> x(n);
  for (int i = 1; i <= n; ++i) x(i - 1) = detail::component_det_ratio(sys, i, d);
  return x;
}

/// x_i by the cross-product quotient
/// (B . cross(A_1,...,A_(i-1),A_(i+1),...,A_n)) / (A_i . same cross).
template <typename Scalar>
Vector<Scalar> solve_via_cross(const LinearSystem<Scalar>& sys) {
  detail::nonsingular_det(sys);
  const int n = sys.size();
  if (n < 2) {
    // cross needs at least one factor; fall back untangles the 1x1 case.
    Vector<Scalar> x(1);
    x(0) = sys.rhs()(0) / sys.coefficients()(0, 0);
    return x;
  }
  Vector<Scalar> x(n);
  for (int i = 1; i <= n; ++i) {
    const Vector<Scalar> c = cross(detail::factors_without(sys, i));
    x(i - 1) = dot(sys.rhs(), c) / dot(sys.column(i), c);
  }
  return x;
}

/// Component i (1-based) alone. In exact mode both forms are computed and
/// must agree exactly; a mismatch is an internal bug.
template <typename Scalar>
Scalar solve_component(const LinearSystem<Scalar>& sys, int i) {
  const int n = sys.size();
  if (i < 1 || i > n) {
    throw DomainError("solve_component: index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));
  }
  const Scalar d = detail::nonsingular_det(sys);
  const Scalar ratio = detail::component_det_ratio(sys, i, d);
  if constexpr (scalar_mode<Scalar>::exact) {
    if (n >= 2) {
      const Vector<Scalar> c = cross(detail::factors_without(sys, i));
      const Scalar quotient = dot(sys.rhs(), c) / dot(sys.column(i), c);
      if (!(quotient == ratio)) {
        throw InternalError("solve_component: cross-quotient and det-ratio paths disagree");
      }
    }
  }
  return ratio;
}

/// Residual sum x_i A_i - B of a candidate solution.
template <typename Scalar>
Vector<Scalar> residual(const LinearSystem<Scalar>& sys, const Vector<Scalar>& x) {
  if (x.size() != sys.size()) throw DomainError("residual: solution dimension mismatch");
  return sys.coefficients() * x - sys.rhs();
}

}  // namespace wedgekit
