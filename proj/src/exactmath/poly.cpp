#include "primebounds/exactmath/poly.hpp"

#include <cctype>
#include <sstream>

#include "primebounds/error.hpp"

namespace pb::exact {

Poly::Poly(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

Poly::Poly(std::initializer_list<BigRational> ascending) : coeffs_(ascending) { normalize(); }

Poly Poly::constant(const BigRational& c) { return Poly({c}); }

Poly Poly::monomial(const BigRational& c, unsigned degree) {
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::t() { return monomial(1, 1); }

void Poly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

BigRational Poly::leading() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

BigRational Poly::eval(const BigRational& t) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

int Poly::sign_at(const BigRational& t) const { return sgn(eval(t)); }

int Poly::sign_at_infinity(bool minus_infinity) const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  if (minus_infinity && degree() % 2 == 1) s = -s;
  return s;
}

double Poly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(1);
  for (unsigned i = 0; i < n; ++i) result *= *this;
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  return r *= BigRational(1) / leading();
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt num_gcd(0);
  for (const auto& c : coeffs_) {
    BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Poly r = *this;
  return r *= BigRational(den_lcm, num_gcd);
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Poly operator-(Poly a) { return a *= BigRational(-1); }

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) out << (mag.get_den() == 1 ? mag.get_num().get_str() : to_decimal(mag, 30));
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DomainError("empty polynomial expression");
  std::vector<BigRational> acc;
  std::size_t pos = 0;
  auto is_var = [](char ch) { return ch == 't' || ch == 'x' || ch == 'y'; };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw DomainError("expected '+' or '-' in polynomial at: " + s.substr(pos));
    }
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '/' ||
            ((s[pos] == 'e' || s[pos] == 'E') && pos + 1 < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos + 1])) || s[pos + 1] == '-')))) {
      if ((s[pos] == 'e' || s[pos] == 'E') && s[pos + 1] == '-') ++pos;
      ++pos;
    }
    BigRational c = pos > start ? parse_rational(s.substr(start, pos - start)) : BigRational(1);
    if (pos < s.size() && s[pos] == '*') ++pos;
    unsigned power = 0;
    if (pos < s.size() && is_var(s[pos])) {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t p0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (p0 == pos) throw DomainError("missing exponent in polynomial: " + s);
        power = static_cast<unsigned>(std::stoul(s.substr(p0, pos - p0)));
      }
    } else if (pos == start) {
      throw DomainError("malformed polynomial term at: " + s.substr(start));
    }
    if (acc.size() <= power) acc.resize(power + 1);
    acc[power] += sign * c;
  }
  return Poly(std::move(acc));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<BigRational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<BigRational> quot(rem.size() - db);
  const BigRational lb = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    BigRational q = rem[k] / lb;
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.primitive();
  }
  return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly::constant(1);
  Poly g = gcd(p, p.derivative());
  return exact_div(p, g).primitive();
}

std::vector<Poly> squarefree_factorization(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly a = gcd(p, p.derivative());
  Poly b = exact_div(p, a);
  Poly c = exact_div(p.derivative(), a);
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly f = gcd(b, d);
    out.push_back(f.monic());
    b = exact_div(b, f);
    c = exact_div(d, f);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

}  // namespace pb::exact
