#pragma once

#include <string>

#include "primebounds/exactmath/poly.hpp"

namespace pb::exact {

/// Quotient num/den of two polynomials over Q, kept canonical:
/// gcd(num, den) = 1 and den monic. Equal functions therefore compare equal
/// coefficient-by-coefficient.
class RationalFn {
 public:
  RationalFn() : den_(Poly::constant(1)) {}
  RationalFn(Poly num);  // NOLINT(google-explicit-constructor): polynomials are rational functions
  RationalFn(Poly num, Poly den);

  /// c / t^k.
  static RationalFn inverse_power(unsigned k, const BigRational& c = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  BigRational eval(const BigRational& t) const;
  double eval(double t) const;
  RationalFn derivative() const;

  RationalFn& operator+=(const RationalFn& rhs);
  RationalFn& operator-=(const RationalFn& rhs);
  RationalFn& operator*=(const RationalFn& rhs);
  RationalFn& operator/=(const RationalFn& rhs);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend RationalFn operator-(const RationalFn& a) { return RationalFn(-a.num_, a.den_); }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 't') const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace pb::exact
