#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "primebounds/error.hpp"
#include "primebounds/exactmath/exactmath.hpp"

using namespace pb::exact;

namespace {

BigRational q(const char* s) { return parse_rational(s); }

const Poly& reg(const char* name) { return PolynomialRegistry::builtin().get(name).poly; }

}  // namespace

TEST_CASE("decimal literals parse to exact rationals") {
  CHECK(q("466.1275") == BigRational(186451, 400));
  CHECK(q("-0.35") == BigRational(-7, 20));
  CHECK(q("6.93e-12") == BigRational(693) / BigRational(BigInt("100000000000000")));
  CHECK(q("1E14") == BigRational(BigInt("100000000000000")));
  CHECK(q("22/7") == BigRational(22, 7));
  CHECK(q(".5") == BigRational(1, 2));
  CHECK(q("3804/1000") == q("3.804"));
  CHECK_THROWS_AS(q("1.2.3"), pb::DomainError);
  CHECK_THROWS_AS(q("abc"), pb::DomainError);
  CHECK_THROWS_AS(q(""), pb::DomainError);
}

TEST_CASE("polynomial parser reads the registry notation") {
  Poly p = Poly::parse("t^7 - t^6 - 3.35t^4 + 2 t - 1");
  CHECK(p.degree() == 7);
  CHECK(p.coeff(7) == 1);
  CHECK(p.coeff(6) == -1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.coeff(4) == q("-3.35"));
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(0) == -1);
  CHECK(Poly::parse("-x^2 + 6.93e-12") == Poly({q("6.93e-12"), 0, -1}));
  CHECK(Poly::parse(p.to_string()) == p);
  CHECK_THROWS_AS(Poly::parse("t^ + 1"), pb::DomainError);
}

TEST_CASE("eval_poly examples") {
  CHECK(Poly::parse("t^2 - 1").eval(BigRational(1)) == 0);
  CHECK(reg("s_thm13").eval(q("4.52")) <= -433);
  CHECK(reg("g_thm13").eval(q("3.804")) > 0);
}

TEST_CASE("division, gcd and square-free parts") {
  Poly a = Poly::parse("t^3 - 6t^2 + 11t - 6");  // (t-1)(t-2)(t-3)
  Poly b = Poly::parse("t^2 - 3t + 2");          // (t-1)(t-2)
  auto [quot, rem] = divmod(a, b);
  CHECK(rem.is_zero());
  CHECK(quot == Poly::parse("t - 3"));
  CHECK(gcd(a * Poly::parse("t+5"), b * Poly::parse("t-7")) == b);

  Poly sq = Poly::parse("t - 2").pow(3) * Poly::parse("t + 1").pow(2) * Poly::parse("3t - 1");
  CHECK(squarefree_part(sq).degree() == 3);
  auto factors = squarefree_factorization(sq);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == Poly::parse("t - 1/3"));
  CHECK(factors[1] == Poly::parse("t + 1"));
  CHECK(factors[2] == Poly::parse("t - 2"));
}

TEST_CASE("rational functions stay canonical") {
  RationalFn f(Poly::parse("t^2 - 1"), Poly::parse("2t - 2"));
  CHECK(f.num() == Poly::parse("1/2 t + 1/2"));
  CHECK(f.den() == Poly::constant(1));
  RationalFn g = RationalFn::inverse_power(2, 3);
  CHECK(g.eval(q("2")) == BigRational(3, 4));
  CHECK(g.derivative() == RationalFn::inverse_power(3, -6));
  CHECK((g - g).num().is_zero());
}

TEST_CASE("sturm_count_roots examples") {
  Poly p = Poly::parse("t^2 - 2");
  CHECK(sturm_count_roots(p, 0, BigRational(2)) == 1);
  CHECK(sturm_count_roots(p, -2, BigRational(2)) == 2);
  CHECK(sturm_count_roots(reg("g_thm13"), q("3.804")) == 0);
  // Half-open convention: a root at b counts, a root at a does not.
  Poly lin = Poly::parse("t - 1");
  CHECK(sturm_count_roots(lin, 0, BigRational(1)) == 1);
  CHECK(sturm_count_roots(lin, 1, BigRational(2)) == 0);
  CHECK_THROWS_AS(sturm_count_roots(Poly{}, 0), pb::DomainError);
  CHECK_THROWS_AS(sturm_count_roots(p, 2, BigRational(1)), pb::DomainError);
}

TEST_CASE("is_nonneg_on_ray examples and tangencies") {
  CHECK(is_nonneg_on_ray(reg("h_thm13"), 1).holds);
  CHECK(is_nonneg_on_ray(reg("s_thm13"), q("4.53")).holds);
  auto cert = is_nonneg_on_ray(Poly::parse("t - 1"), 0);
  CHECK_FALSE(cert.holds);
  CHECK(cert.sign_at_start < 0);

  Poly tangent = Poly::parse("t - 2").pow(2);
  auto tc = is_nonneg_on_ray(tangent, 0);
  CHECK(tc.holds);
  CHECK(tc.distinct_roots == 1);
  CHECK(tc.sign_changing_roots == 0);
  CHECK_FALSE(is_positive_on_ray(tangent, 0).holds);
  CHECK_FALSE(is_nonneg_on_ray(Poly::parse("t - 2").pow(3), 0).holds);
  CHECK(is_nonneg_on_ray(Poly::parse("t - 2").pow(3), 2).holds);
  CHECK_FALSE(is_nonneg_on_ray(Poly::parse("-t^2 + 100"), 0).holds);
  CHECK(is_nonneg_on_interval(Poly::parse("-t^2 + 100"), 0, BigRational(10)).holds);
  CHECK_FALSE(is_positive_on_interval(Poly::parse("-t^2 + 100"), 0, BigRational(10)).holds);
}

TEST_CASE("property: Sturm counts match constructed factorizations") {
  std::mt19937_64 rng(20241015);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<BigRational> roots;
    std::vector<std::pair<BigRational, int>> factors;
    Poly p = Poly::constant(BigRational(num(rng) == 0 ? 1 : (trial % 2 ? 3 : -2)));
    int degree = 0;
    const int want = 1 + trial % 6;
    while (degree < want) {
      BigRational r(num(rng), den(rng));
      r.canonicalize();
      if (roots.count(r)) continue;
      int m = std::min(mult(rng), want - degree);
      roots.insert(r);
      factors.emplace_back(r, m);
      p *= Poly({-r, 1}).pow(static_cast<unsigned>(m));
      degree += m;
    }
    BigRational a(num(rng), den(rng));
    BigRational b = a + BigRational(1 + (trial % 30), den(rng));
    a.canonicalize();
    b.canonicalize();
    int expected = 0;
    int expected_ray = 0;
    for (const auto& r : roots) {
      if (r > a && r <= b) ++expected;
      if (r > a) ++expected_ray;
    }
    CHECK(sturm_count_roots(p, a, b) == expected);
    CHECK(sturm_count_roots(p, a) == expected_ray);

    // Brute-force sampling: the sign of p on a fine grid never goes negative
    // iff the certificate says so (grid includes every root's neighbourhood).
    bool sampled_nonneg = true;
    std::vector<BigRational> probes{a};
    for (const auto& [r, m] : factors) {
      probes.push_back(r + BigRational(1, 1000));
      probes.push_back(r - BigRational(1, 1000));
    }
    probes.push_back(a + 1000);
    for (const auto& x : probes) {
      if (x >= a && p.sign_at(x) < 0) sampled_nonneg = false;
    }
    CHECK(is_nonneg_on_ray(p, a).holds == sampled_nonneg);
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-1000, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigRational> pc, qc;
    for (int i = 0; i < 1 + trial % 7; ++i) pc.emplace_back(c(rng), 1 + std::abs(c(rng)));
    for (int i = 0; i < 1 + trial % 5; ++i) qc.emplace_back(c(rng), 1 + std::abs(c(rng)));
    Poly p(pc), r(qc);
    BigRational t(c(rng), 1 + std::abs(c(rng)));
    t.canonicalize();
    CHECK((p * r).eval(t) == p.eval(t) * r.eval(t));
    CHECK((p + r).eval(t) == p.eval(t) + r.eval(t));
  }
}

TEST_CASE("registry: every recorded sign claim certifies") {
  const auto& registry = PolynomialRegistry::builtin();
  std::set<std::string> names;
  for (const auto& e : registry.entries()) names.insert(e.name);
  CHECK(names.size() == registry.entries().size());
  CHECK(registry.get("s_thm13").poly != registry.get("s_thm14").poly);
  for (const auto& result : registry.check_all()) {
    INFO(result.statement << " -- " << result.certificate.detail);
    CHECK(result.holds);
  }
  CHECK_THROWS_AS(registry.get("nope"), pb::UnknownName);
}

TEST_CASE("registry: perturbed thresholds fail where the real root sits") {
  // g_thm13 has a root just below 3.804, s_thm13 just below 4.53.
  CHECK_FALSE(is_positive_on_ray(reg("g_thm13"), q("3.7")).holds);
  CHECK_FALSE(is_nonneg_on_ray(reg("s_thm13"), q("4.52")).holds);
  CHECK_FALSE(is_nonneg_on_ray(reg("eq316_num"), q("32.2")).holds);
}

TEST_CASE("registry JSON dump carries the audit fields") {
  auto j = PolynomialRegistry::builtin().to_json();
  REQUIRE(j.is_array());
  bool saw_u = false;
  for (const auto& e : j) {
    CHECK(e.contains("name"));
    CHECK(e.contains("degree"));
    CHECK(e.contains("coefficients"));
    CHECK(e.contains("threshold"));
    CHECK(e.contains("claimed_sign"));
    CHECK(e.contains("paper_location"));
    if (e["name"] == "u_thm12") {
      saw_u = true;
      CHECK(e["degree"] == 8);
      CHECK(e["coefficients"][0] == "-39732");
      CHECK(e["coefficients"][5] == "-7/20");
      CHECK(e["threshold"] == "19/5");
    }
  }
  CHECK(saw_u);
}

TEST_CASE("BigFloat directed rounding encloses logarithms") {
  auto enc = log_enclosure(BigRational(BigInt("100000000000000")));
  CHECK(enc.lo < enc.hi);
  CHECK(enc.lo >= q("32.23619"));
  CHECK(enc.hi <= q("32.2362"));
  BigFloat x(2.0, 200);
  CHECK(exp(log(x)).to_double() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("logspace_sum_compare on the theta-error inequality") {
  // Oracle: the third term is an exact rational; the first two are below 1e-700.
  auto terms_for = [](const char* eps) {
    return std::vector<LogspaceTerm>{
        {q("1.00007"), Poly::parse("t^3"), q("1/2")},
        {q("1.78"), Poly::parse("t^3"), q("2/3")},
        {q(eps), Poly::parse("t+1").pow(3), 0},
    };
  };
  const BigRational exact0 = q("6.93e-12") * pow(BigRational(3601), 3);
  CHECK(exact0 == q("0.32359559325093"));  // 6.93e-12 * 46694890801
  auto t0 = terms_for("6.93e-12");
  auto r0 = logspace_sum_compare(t0, 3600, q("0.35"));
  CHECK(r0.below);
  CHECK(r0.sum == doctest::Approx(0.3236).epsilon(1e-4));
  CHECK(r0.sum == doctest::Approx(exact0.get_d()).epsilon(1e-14));
  CHECK(r0.log_terms[0] < -700 * std::log(10.0));
  CHECK(r0.log_terms[1] < -700 * std::log(10.0));
  CHECK(r0.bits_used >= 128);

  const BigRational exact100 = q("6.49e-12") * pow(BigRational(3701), 3);
  auto t100 = terms_for("6.49e-12");
  auto r100 = logspace_sum_compare(t100, 3700, q("0.35"));
  CHECK(r100.below);
  CHECK(r100.sum == doctest::Approx(0.329).epsilon(1e-3));
  CHECK(r100.sum == doctest::Approx(exact100.get_d()).epsilon(1e-14));

  CHECK_FALSE(logspace_sum_compare(t0, 3600, 0).below);
  CHECK_FALSE(logspace_sum_compare(t0, 3600, q("0.32")).below);

  // Exactly at the threshold the sign cannot be decided at any precision.
  std::vector<LogspaceTerm> exact{{q("0.25"), Poly::constant(1), 0}};
  CHECK_THROWS_AS(logspace_sum_compare(exact, 1, q("0.25"), 128, 512), pb::PrecisionInsufficient);
  std::vector<LogspaceTerm> bad{{1, Poly::parse("t - 5"), 0}};
  CHECK_THROWS_AS(logspace_sum_compare(bad, 1, 1), pb::DomainError);
}
