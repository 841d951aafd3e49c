#include "primebounds/exactmath/sturm.hpp"

#include <sstream>

#include "primebounds/error.hpp"

namespace pb::exact {

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void require_interval(const BigRational& a, const UpperEnd& b) {
  if (b && !(a < *b)) throw DomainError("empty interval: require a < b");
}

/// Distinct roots in the open interval (a, b).
int open_interval_roots(const Poly& p, const BigRational& a, const UpperEnd& b) {
  if (p.degree() <= 0) return 0;
  int n = sturm_count_roots(p, a, b);
  if (b && p.sign_at(*b) == 0) --n;
  return n;
}

std::string describe(const SignCertificate& c, const BigRational& a, const UpperEnd& b) {
  std::ostringstream out;
  out << "on [" << to_decimal(a) << ", " << (b ? to_decimal(*b) : std::string("inf")) << "]: sign at start "
      << c.sign_at_start << ", distinct roots inside " << c.distinct_roots << ", sign-changing roots inside "
      << c.sign_changing_roots;
  return out.str();
}

}  // namespace

SturmChain SturmChain::build(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.sequence_.push_back(p.primitive());
  if (p.degree() == 0) return chain;
  chain.sequence_.push_back(p.derivative().primitive());
  while (true) {
    const auto& a = chain.sequence_[chain.sequence_.size() - 2];
    const auto& b = chain.sequence_.back();
    Poly r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.sequence_.push_back((-r).primitive());
  }
  return chain;
}

int SturmChain::variations_at(const BigRational& t) const {
  std::vector<int> signs;
  signs.reserve(sequence_.size());
  for (const auto& q : sequence_) signs.push_back(q.sign_at(t));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool minus_infinity) const {
  std::vector<int> signs;
  signs.reserve(sequence_.size());
  for (const auto& q : sequence_) signs.push_back(q.sign_at_infinity(minus_infinity));
  return count_variations(signs);
}

int sturm_count_roots(const Poly& p, const BigRational& a, const UpperEnd& b) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  require_interval(a, b);
  // On a square-free polynomial V(a) - V(b) counts roots in (a, b] exactly,
  // including when a or b is itself a root.
  const SturmChain chain = SturmChain::build(squarefree_part(p));
  const int va = chain.variations_at(a);
  const int vb = b ? chain.variations_at(*b) : chain.variations_at_infinity();
  return va - vb;
}

SignCertificate is_nonneg_on_interval(const Poly& p, const BigRational& a, const UpperEnd& b) {
  require_interval(a, b);
  SignCertificate cert;
  if (p.is_zero()) {
    cert.holds = true;
    cert.detail = "zero polynomial";
    return cert;
  }
  cert.sign_at_start = p.sign_at(a);
  cert.distinct_roots = open_interval_roots(p, a, b);

  // p = k * odd * even with even >= 0 everywhere; only the odd part can change sign.
  Poly odd = Poly::constant(1);
  const auto factors = squarefree_factorization(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) odd *= factors[i];
  cert.sign_changing_roots = open_interval_roots(odd, a, b);

  if (cert.sign_changing_roots == 0) {
    // Sign of p away from its roots: sign(k) * sign(odd) on the interval.
    const int k_sign = sgn(p.leading()) * sgn(odd.leading());
    int odd_sign = 0;
    if (odd.degree() <= 0) {
      odd_sign = 1;
    } else if (!b) {
      odd_sign = odd.sign_at_infinity();
    } else {
      odd_sign = odd.sign_at((a + *b) / 2);
    }
    cert.holds = k_sign * odd_sign > 0;
  }
  cert.detail = describe(cert, a, b);
  return cert;
}

SignCertificate is_positive_on_interval(const Poly& p, const BigRational& a, const UpperEnd& b) {
  require_interval(a, b);
  SignCertificate cert;
  if (p.is_zero()) {
    cert.detail = "zero polynomial";
    return cert;
  }
  cert.sign_at_start = p.sign_at(a);
  cert.distinct_roots = p.degree() > 0 ? sturm_count_roots(p, a, b) : 0;  // (a, b] for strictness
  cert.sign_changing_roots = cert.distinct_roots;
  cert.holds = cert.sign_at_start > 0 && cert.distinct_roots == 0;
  cert.detail = describe(cert, a, b);
  return cert;
}

SignCertificate is_nonneg_on_ray(const Poly& p, const BigRational& a) { return is_nonneg_on_interval(p, a, std::nullopt); }

SignCertificate is_positive_on_ray(const Poly& p, const BigRational& a) {
  return is_positive_on_interval(p, a, std::nullopt);
}

}  // namespace pb::exact
