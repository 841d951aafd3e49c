#include "primebounds/exactmath/rational_fn.hpp"

#include "primebounds/error.hpp"

namespace pb::exact {

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

RationalFn RationalFn::inverse_power(unsigned k, const BigRational& c) {
  return RationalFn(Poly::constant(c), Poly::monomial(1, k));
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const BigRational lc = den_.leading();
  if (lc != 1) {
    const BigRational inv = BigRational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational RationalFn::eval(const BigRational& t) const {
  BigRational d = den_.eval(t);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_.eval(t) / d;
}

double RationalFn::eval(double t) const { return num_.eval(t) / den_.eval(t); }

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
  *this = RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
  *this = RationalFn(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
  *this = RationalFn(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& rhs) {
  if (rhs.num_.is_zero()) throw DomainError("division by the zero rational function");
  *this = RationalFn(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string RationalFn::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace pb::exact
