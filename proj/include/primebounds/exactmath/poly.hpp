#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primebounds/exactmath/rational.hpp"

namespace pb::exact {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> ascending);
  Poly(std::initializer_list<BigRational> ascending);

  /// Constant polynomial.
  static Poly constant(const BigRational& c);
  /// c * t^degree.
  static Poly monomial(const BigRational& c, unsigned degree);
  /// The identity polynomial t.
  static Poly t();

  /// Parses expressions such as `t^7 - t^6 - 3.35t^4 + 466.1275t - 3489.8225`.
  /// The variable may be written as t, x or y; `*` between a coefficient and the
  /// variable is optional. Coefficients are parsed exactly.
  static Poly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  BigRational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigRational leading() const;

  BigRational eval(const BigRational& t) const;
  /// Sign of p(t) evaluated exactly.
  int sign_at(const BigRational& t) const;
  /// Sign as t -> +infinity (or -infinity when `minus_infinity`).
  int sign_at_infinity(bool minus_infinity = false) const;
  double eval(double t) const;

  Poly derivative() const;
  /// p(t)^n.
  Poly pow(unsigned n) const;
  /// Same polynomial divided by its leading coefficient.
  Poly monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  Poly primitive() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const BigRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
  friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in descending degree, e.g. `t^2 - 2`.
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Square-free part p / gcd(p, p'), made primitive with positive leading coefficient.
Poly squarefree_part(const Poly& p);

/// Yun's square-free factorization: p = c * prod f_i^i.
/// Entry i-1 of the result is f_i (monic); trailing unit factors are dropped.
std::vector<Poly> squarefree_factorization(const Poly& p);

}  // namespace pb::exact
