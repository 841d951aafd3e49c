#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "primebounds/exactmath/rational.hpp"

namespace pb::exact {

/// Multiple-precision binary float (MPFR) with an explicit per-value precision.
///
/// Binary operations produce a result at the larger precision of the two
/// operands, rounded to nearest. The free functions taking an `mpfr_rnd_t`
/// expose directed rounding for single-operation rigorous bounds.
class BigFloat {
 public:
  static constexpr unsigned kDefaultBits = 128;

  explicit BigFloat(unsigned bits = kDefaultBits);
  BigFloat(double value, unsigned bits);
  BigFloat(long value, unsigned bits);
  BigFloat(const BigRational& value, unsigned bits, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigInt& value, unsigned bits, mpfr_rnd_t rnd = MPFR_RNDN);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact rational value of this float (finite values only).
  BigRational to_rational() const;
  std::string to_string(int digits = 20) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat parse_bigfloat(std::string_view text, unsigned bits);

BigFloat log(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat cbrt(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat abs(const BigFloat& x);
BigFloat pow(const BigFloat& x, unsigned long exponent, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat euler_gamma(unsigned bits);

/// Rigorous enclosure [lo, hi] of log(x) for a positive rational x.
struct LogEnclosure {
  BigRational lo;
  BigRational hi;
};
LogEnclosure log_enclosure(const BigRational& x, unsigned bits = 256);

}  // namespace pb::exact
