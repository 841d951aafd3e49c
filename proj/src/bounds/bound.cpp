#include "primebounds/bounds/bound.hpp"

#include <cmath>
#include <string>

#include "primebounds/bounds/li.hpp"
#include "primebounds/error.hpp"

namespace pb::bounds {

using exact::Poly;
using exact::RationalFn;

namespace {

struct EtaRow {
  unsigned k;
  const char* eta;
  std::uint64_t x0;
};

// x0 for the 0.35 row is ceil(e^30).
constexpr EtaRow kEtaRows[] = {
    {1, "0.001", 908994923}, {2, "0.01", 7713133853}, {3, "0.78", 158822621},
    {4, "1300", 2},          {3, "0.35", 10686474581525},
};

void require_x_above_one(double x) {
  if (!(x > 1)) throw DomainError("bounds are evaluated for x > 1 only");
}

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string to_string(Direction d) { return d == Direction::kUpper ? "upper" : "lower"; }

std::string to_string(Shape s) {
  switch (s) {
    case Shape::kSum: return "sum";
    case Shape::kPanaitopol: return "panaitopol";
    case Shape::kLi: return "li";
    case Shape::kJ: return "J";
  }
  return "?";
}

double JSpec::theta_adverse() const { return exact::sign(eta) > 0 ? theta_x1.lower() : theta_x1.upper(); }

double Threshold::x() const { return in_log ? std::exp(exact::to_double(value)) : exact::to_double(value); }

double Threshold::log_x() const { return in_log ? exact::to_double(value) : std::log(exact::to_double(value)); }

std::string Threshold::text() const {
  const std::string v = exact::to_decimal(value, 20);
  return in_log ? "x >= e^" + v : "x >= " + v;
}

void validate_jspec(const JSpec& spec) {
  if (spec.k < 1 || spec.k > 4) throw DomainError("J requires 1 <= k <= 4");
  const BigRational eta = exact::sign(spec.eta) < 0 ? BigRational(-spec.eta) : spec.eta;
  for (const EtaRow& row : kEtaRows) {
    if (row.k == spec.k && exact::parse_rational(row.eta) == eta && spec.x1 >= row.x0) return;
  }
  throw DomainError("no theta-distance row admits k=" + std::to_string(spec.k) + ", eta=" + exact::to_decimal(eta) +
                    ", x1=" + std::to_string(spec.x1));
}

double eval_sum_bound(const SumBound& spec, double x) {
  require_x_above_one(x);
  const double s = 1.0 / std::log(x);
  double acc = 0.0;
  for (auto it = spec.coefficients.rbegin(); it != spec.coefficients.rend(); ++it) {
    acc = (acc + exact::to_double(*it)) * s;
  }
  return x * acc;
}

double panaitopol_denominator(const PanaitopolBound& spec, double t) {
  const double s = 1.0 / t;
  double tail = 0.0;
  for (auto it = spec.a.rbegin(); it != spec.a.rend(); ++it) tail = (tail + exact::to_double(*it)) * s;
  return t - exact::to_double(spec.a0) - tail;
}

double eval_panaitopol_bound(const PanaitopolBound& spec, double x) {
  require_x_above_one(x);
  const double d = panaitopol_denominator(spec, std::log(x));
  if (!(d > 0)) throw DenominatorNonPositive("denominator is not positive at x = " + std::to_string(x));
  return x / d;
}

double log_power_antiderivative(unsigned m, double x) {
  if (m == 0) throw DomainError("antiderivative index starts at 1");
  const double t = std::log(x);
  double f = eval_li(x);
  for (unsigned j = 1; j < m; ++j) f = (f - x / std::pow(t, j)) / j;
  return f;
}

double eval_J(const JSpec& spec, double x) {
  if (x < static_cast<double>(spec.x1)) throw DomainError("J is evaluated for x >= x1 only");
  require_x_above_one(x);
  const double eta = exact::to_double(spec.eta);
  const double x1 = static_cast<double>(spec.x1);
  const double t = std::log(x);
  const double t1 = std::log(x1);
  double value = static_cast<double>(spec.pi_x1) - spec.theta_adverse() / t1;
  value += x / t + eta * x / std::pow(t, spec.k + 1);
  if (x > x1) {
    value += log_power_antiderivative(2, x) - log_power_antiderivative(2, x1);
    value += eta * (log_power_antiderivative(spec.k + 2, x) - log_power_antiderivative(spec.k + 2, x1));
  }
  return value;
}

double eval_bound(const BoundSpec& spec, double x) {
  return std::visit(Overloaded{
                        [&](const SumBound& s) { return eval_sum_bound(s, x); },
                        [&](const PanaitopolBound& p) { return eval_panaitopol_bound(p, x); },
                        [&](const LiBound&) { return eval_li(x); },
                        [&](const JSpec& j) { return eval_J(j, x); },
                    },
                    spec.form);
}

Poly panaitopol_denominator_poly(const PanaitopolBound& spec) {
  const unsigned n = static_cast<unsigned>(spec.a.size());
  Poly p = Poly::monomial(1, n + 1) - Poly::monomial(spec.a0, n);
  for (unsigned i = 1; i <= n; ++i) p -= Poly::monomial(spec.a[i - 1], n - i);
  return p;
}

RationalFn panaitopol_denominator_fn(const PanaitopolBound& spec) {
  return RationalFn(panaitopol_denominator_poly(spec), Poly::monomial(1, static_cast<unsigned>(spec.a.size())));
}

BigFloat log_power_antiderivative(unsigned m, const BigFloat& x) {
  if (m == 0) throw DomainError("antiderivative index starts at 1");
  const unsigned bits = x.precision();
  const BigFloat t = exact::log(x);
  BigFloat f = eval_li(x);
  BigFloat power(1L, bits);
  for (unsigned j = 1; j < m; ++j) {
    power *= t;
    f = (f - x / power) / BigFloat(static_cast<long>(j), bits);
  }
  return f;
}

BigFloat eval_J_hp(const JSpec& spec, const BigFloat& x) {
  const unsigned bits = x.precision();
  const BigFloat x1(exact::BigInt(spec.x1), bits);
  if (x < x1) throw DomainError("J is evaluated for x >= x1 only");
  const BigFloat eta(spec.eta, bits);
  const BigFloat t = exact::log(x);
  const BigFloat t1 = exact::log(x1);
  BigFloat value = BigFloat(exact::BigInt(spec.pi_x1), bits) - BigFloat(spec.theta_adverse(), bits) / t1;
  value += x / t + eta * x / exact::pow(t, spec.k + 1);
  if (x > x1) {
    value += log_power_antiderivative(2, x) - log_power_antiderivative(2, x1);
    value += eta * (log_power_antiderivative(spec.k + 2, x) - log_power_antiderivative(spec.k + 2, x1));
  }
  return value;
}

BigFloat eval_bound_hp(const BoundSpec& spec, const BigFloat& x) {
  const unsigned bits = x.precision();
  if (!(x > BigFloat(1L, bits))) throw DomainError("bounds are evaluated for x > 1 only");
  return std::visit(
      Overloaded{
          [&](const SumBound& s) {
            const BigFloat inv = BigFloat(1L, bits) / exact::log(x);
            BigFloat acc(bits);
            for (auto it = s.coefficients.rbegin(); it != s.coefficients.rend(); ++it) {
              acc = (acc + BigFloat(*it, bits)) * inv;
            }
            return x * acc;
          },
          [&](const PanaitopolBound& p) {
            const BigFloat t = exact::log(x);
            const BigFloat inv = BigFloat(1L, bits) / t;
            BigFloat tail(bits);
            for (auto it = p.a.rbegin(); it != p.a.rend(); ++it) tail = (tail + BigFloat(*it, bits)) * inv;
            const BigFloat d = t - BigFloat(p.a0, bits) - tail;
            if (d.sign() <= 0) throw DenominatorNonPositive("denominator is not positive at x = " + x.to_string());
            return x / d;
          },
          [&](const LiBound&) { return eval_li(x); },
          [&](const JSpec& j) { return eval_J_hp(j, x); },
      },
      spec.form);
}

RationalFn bound_derivative_in_t(const BoundSpec& spec) {
  return std::visit(Overloaded{
                        [](const SumBound& s) {
                          // x P(1/t) -> P(1/t) - P'(1/t)/t^2
                          RationalFn r;
                          for (unsigned i = 1; i <= s.coefficients.size(); ++i) {
                            const BigRational& c = s.coefficients[i - 1];
                            r += RationalFn::inverse_power(i, c);
                            r -= RationalFn::inverse_power(i + 1, c * i);
                          }
                          return r;
                        },
                        [](const PanaitopolBound& p) {
                          const RationalFn d = panaitopol_denominator_fn(p);
                          return (d - d.derivative()) / (d * d);
                        },
                        [](const LiBound&) { return RationalFn::inverse_power(1); },
                        [](const JSpec& j) {
                          return RationalFn::inverse_power(1) + RationalFn::inverse_power(j.k + 1, j.eta) -
                                 RationalFn::inverse_power(j.k + 2, j.eta * j.k);
                        },
                    },
                    spec.form);
}

}  // namespace pb::bounds
