#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>

#include "wedgekit/rational.hpp"

namespace wedgekit {

// Dense row-major matrix of a single scalar mode. The scalar type *is* the
// mode: Rational for exact arithmetic, double for floating point. Mixing
// modes in one expression does not compile.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixD = Matrix<double>;
using VectorD = Vector<double>;

using Count = std::uint64_t;

template <typename Scalar>
struct scalar_mode;

template <>
struct scalar_mode<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct scalar_mode<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

// Float comparison policy: relative 1e-9 with absolute floor 1e-12.
inline constexpr double float_rel_tol = 1e-9;
inline constexpr double float_abs_tol = 1e-12;
// A float pivot below float_pivot_rel times the largest row norm is treated
// as singular.
inline constexpr double float_pivot_rel = 1e-12;

inline bool approx_equal(double a, double b) {
  const double diff = std::abs(a - b);
  const double scale = std::max(std::abs(a), std::abs(b));
  return diff <= std::max(float_abs_tol, float_rel_tol * scale);
}

template <typename Scalar>
bool scalar_equal(const Scalar& a, const Scalar& b) {
  if constexpr (scalar_mode<Scalar>::exact) {
    return a == b;
  } else {
    return approx_equal(a, b);
  }
}

}  // namespace wedgekit
