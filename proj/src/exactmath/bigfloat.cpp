#include "primebounds/exactmath/bigfloat.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "primebounds/error.hpp"

namespace pb::exact {

namespace {

unsigned max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(unsigned bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, unsigned bits) : BigFloat(bits) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(long value, unsigned bits) : BigFloat(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const BigRational& value, unsigned bits, mpfr_rnd_t rnd) : BigFloat(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigInt& value, unsigned bits, mpfr_rnd_t rnd) : BigFloat(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigRational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite BigFloat has no rational value");
  BigInt mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
  BigRational r(mant);
  if (e > 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else if (e < 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat parse_bigfloat(std::string_view text, unsigned bits) {
  return BigFloat(parse_rational(text), bits);
}

BigFloat log(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), rnd);
  return r;
}

BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), rnd);
  return r;
}

BigFloat cbrt(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_cbrt(r.get(), x.get(), rnd);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, unsigned long exponent, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), exponent, rnd);
  return r;
}

BigFloat euler_gamma(unsigned bits) {
  BigFloat r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

LogEnclosure log_enclosure(const BigRational& x, unsigned bits) {
  if (x <= 0) throw DomainError("log of a non-positive number");
  // Round the argument outward first, then the logarithm outward.
  BigFloat lo_arg(x, bits, MPFR_RNDD);
  BigFloat hi_arg(x, bits, MPFR_RNDU);
  BigFloat lo = log(lo_arg, MPFR_RNDD);
  BigFloat hi = log(hi_arg, MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

}  // namespace pb::exact
