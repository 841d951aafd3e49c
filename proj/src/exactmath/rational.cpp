#include "primebounds/exactmath/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "primebounds/error.hpp"

namespace pb::exact {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ten_pow(unsigned n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

[[noreturn]] void malformed(std::string_view text) {
  throw DomainError("not an exact number: '" + std::string(text) + "'");
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) malformed(text);
  const std::string_view original = text;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigRational num = parse_rational(text.substr(0, slash));
    BigRational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(original) + "'");
    BigRational r = num / den;
    r.canonicalize();
    return r;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) malformed(original);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) malformed(original);
  if (!int_part.empty() && !all_digits(int_part)) malformed(original);
  if (!frac_part.empty() && !all_digits(frac_part)) malformed(original);

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  BigRational r(mantissa);
  if (exponent > 0) {
    r *= ten_pow(static_cast<unsigned>(exponent));
  } else if (exponent < 0) {
    r /= ten_pow(static_cast<unsigned>(-exponent));
  }
  r.canonicalize();
  return negative ? BigRational(-r) : r;
}

BigRational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
  BigRational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

int sign(const BigRational& value) { return sgn(value); }

std::string to_string(const BigRational& value) { return value.get_str(10); }

std::string to_decimal(const BigRational& value, int digits) {
  mpf_class f(value, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty()) return "0";
  bool negative = mant.front() == '-';
  if (negative) mant.erase(0, 1);
  std::ostringstream out;
  if (negative) out << '-';
  const long len = static_cast<long>(mant.size());
  if (exp > 0 && exp <= 21) {
    if (len <= exp) {
      out << mant << std::string(static_cast<std::size_t>(exp - len), '0');
    } else {
      out << mant.substr(0, static_cast<std::size_t>(exp)) << '.' << mant.substr(static_cast<std::size_t>(exp));
    }
  } else if (exp <= 0 && exp > -7) {
    out << "0." << std::string(static_cast<std::size_t>(-exp), '0') << mant;
  } else {
    out << mant.front();
    if (len > 1) out << '.' << mant.substr(1);
    out << 'e' << (exp - 1);
  }
  return out.str();
}

double to_double(const BigRational& value) { return value.get_d(); }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt floor(const BigRational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

}  // namespace pb::exact
