#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <string>

#include "wedgekit/error.hpp"

namespace wedgekit {

/// Arbitrary-precision rational scalar backed by GMP.
///
/// Invariant: always canonical — denominator > 0 and gcd(num, den) = 1.
/// All arithmetic is eager (no expression templates leak out), so Rational
/// can be used as an Eigen scalar type.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}       // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rational fraction(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(trusted{}, q);
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return v_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(trusted{}, mpq_class(-v_)); }
  Rational operator+() const { return *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(trusted{}, mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(trusted{}, mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(trusted{}, mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rational(trusted{}, mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct trusted {};
  // GMP arithmetic preserves canonical form, so results skip canonicalize().
  Rational(trusted, mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

}  // namespace wedgekit

namespace Eigen {

template <>
struct NumTraits<wedgekit::Rational> : GenericNumTraits<wedgekit::Rational> {
  typedef wedgekit::Rational Real;
  typedef wedgekit::Rational NonInteger;
  typedef wedgekit::Rational Nested;
  typedef wedgekit::Rational Literal;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
