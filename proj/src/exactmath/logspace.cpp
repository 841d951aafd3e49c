#include "primebounds/exactmath/logspace.hpp"

#include <cmath>

#include "primebounds/error.hpp"
#include "primebounds/exactmath/bigfloat.hpp"

namespace pb::exact {

namespace {

struct Attempt {
  BigFloat sum;
  BigFloat margin;
  std::vector<double> log_terms;
};

Attempt evaluate(std::span<const LogspaceTerm> terms, const BigRational& at, unsigned bits) {
  Attempt out{BigFloat(bits), BigFloat(bits), {}};
  // Smallest positive magnitude representable; stands in for any term that underflows.
  BigFloat tiny(bits);
  mpfr_set_ui_2exp(tiny.get(), 1, mpfr_get_emin(), MPFR_RNDU);
  const BigFloat unit_roundoff = pow(BigFloat(0.5, bits), bits - 1);

  for (const auto& term : terms) {
    if (term.coeff == 0) {
      out.log_terms.push_back(-INFINITY);
      continue;
    }
    const BigRational factor = term.factor.eval(at);
    if (factor <= 0) throw DomainError("log-space term with non-positive polynomial factor");
    const BigRational scaled = abs(term.coeff) * factor;
    BigFloat log_mag = log(BigFloat(scaled, bits)) - BigFloat(term.exp_rate * at, bits);
    out.log_terms.push_back(log_mag.to_double());
    BigFloat value = exp(log_mag);
    // |error of log_mag| <= 4u(1 + |log_mag|); exp turns it into a relative error.
    BigFloat rel = BigFloat(4L, bits) * unit_roundoff * (BigFloat(1L, bits) + abs(log_mag));
    if (value.sign() == 0) {
      value = tiny;
      out.margin += tiny;
    }
    out.margin += value * rel * BigFloat(2L, bits);
    if (term.coeff < 0) value = -value;
    out.sum += value;
    out.margin += abs(out.sum) * unit_roundoff;
  }
  return out;
}

}  // namespace

LogspaceOutcome logspace_sum_compare(std::span<const LogspaceTerm> terms, const BigRational& at,
                                     const BigRational& threshold, unsigned min_bits, unsigned max_bits) {
  LogspaceOutcome outcome;
  for (unsigned bits = std::max(min_bits, 64U); bits <= max_bits; bits *= 2) {
    Attempt a = evaluate(terms, at, bits);
    const BigFloat gap = a.sum - BigFloat(threshold, bits);
    outcome.sum = a.sum.to_double();
    outcome.sum_text = a.sum.to_string(30);
    outcome.log_terms = std::move(a.log_terms);
    outcome.margin = a.margin.to_double();
    outcome.bits_used = bits;
    if (abs(gap) > a.margin) {
      outcome.below = gap.sign() < 0;
      return outcome;
    }
    ++outcome.escalations;
  }
  throw PrecisionInsufficient("log-space sum straddles the threshold within rounding margin at " +
                              std::to_string(max_bits) + " bits");
}

}  // namespace pb::exact
