#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wedgekit/types.hpp"

namespace wedgekit {

// Matrix text format: one row per line, entries whitespace-separated, UTF-8.
// Exact entries are "p" or "p/q"; float entries are decimal literals. Shape
// is inferred; ragged rows are rejected. System files carry the same rows
// followed by one final line "b: <entries>" with the right-hand side.

Rational parse_rational_token(std::string_view token);  // throws DomainError
double parse_double_token(std::string_view token);      // throws DomainError

std::string to_token(const Rational& r);
std::string to_token(double d);

MatrixQ parse_matrix_exact(std::string_view text);
MatrixD parse_matrix_float(std::string_view text);

template <typename Scalar>
struct SystemInput {
  Matrix<Scalar> coefficients;
  Vector<Scalar> rhs;
};

SystemInput<Rational> parse_system_exact(std::string_view text);
SystemInput<double> parse_system_float(std::string_view text);

template <typename Scalar>
std::string row_string(const Matrix<Scalar>& m, Eigen::Index i) {
  std::string out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (j > 0) out += ' ';
    out += to_token(m(i, j));
  }
  return out;
}

/// Rows rendered in the file format; re-parsing them reproduces the matrix.
template <typename Scalar>
std::vector<std::string> matrix_lines(const Matrix<Scalar>& m) {
  std::vector<std::string> lines;
  lines.reserve(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) lines.push_back(row_string(m, i));
  return lines;
}

template <typename Scalar>
std::vector<std::string> vector_tokens(const Vector<Scalar>& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_token(v(i)));
  return out;
}

}  // namespace wedgekit
