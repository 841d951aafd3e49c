#include "primebounds/bounds/constants.hpp"

#include "primebounds/error.hpp"

namespace pb::bounds {

namespace {

std::vector<PinnedConstant> build() {
  struct Row {
    const char* name;
    const char* value;
    const char* relation;
    const char* quantity;
    const char* provenance;
  };
  static constexpr Row rows[] = {
      {"skewes_lower", "100000000000000", ">", "Xi", "Proposition 2.1"},
      {"pi_1e14", "3204941750802", "=", "pi(10^14)", "Theorem 1.1 proof"},
      {"theta_1e14_lower", "99999990573246", ">=", "theta(10^14)", "Theorem 1.1 proof, Dusart"},
      {"theta_1e14_upper", "99999990573247", "<=", "theta(10^14)", "Theorem 1.4 proof, Dusart Table 6.2"},
      {"log_1e14_lower", "32.23619", "<=", "log(10^14)", "Theorem 1.4 proof"},
      {"log_1e14_upper", "32.2362", ">=", "log(10^14)", "Theorem 1.1 proof"},
      {"b_thm13", "32.236192", ">=", "log(10^14)", "Theorem 1.3 proof"},
      {"K1_upper", "102839438084", ">=", "pi(10^14) - theta(10^14)/log(10^14)", "Theorem 1.1 proof"},
      {"K1_lower", "102838475779", "<=", "pi(10^14) - theta(10^14)/log(10^14)", "Theorem 1.4 proof"},
      {"J_minus_phi_1e14", "322936", "<=", "J_{3,-0.35,10^14}(10^14) - phi(10^14)", "Theorem 1.4 proof"},
      {"pi_8e9", "367783654", "=", "pi(8*10^9)", "Theorem 1.4 proof"},
      {"theta_8e9_upper", "7999890793", ">=", "theta(8*10^9)", "Theorem 1.4 proof, Dusart Table 6.1"},
      {"log_8e9_lower", "22.8027", "<=", "log(8*10^9)", "Theorem 1.4 proof"},
      {"log_8e9_lower_coarse", "22.8", "<=", "log(8*10^9)", "Theorem 1.4 proof"},
      {"log_8e9_upper", "22.8028", ">=", "log(8*10^9)", "Theorem 1.4 proof"},
      {"pi_theta_8e9", "16952796", "<=", "pi(8*10^9) - theta(8*10^9)/log(8*10^9)", "Theorem 1.4 proof"},
      {"J_minus_phi_8e9", "2360", "<=", "J_{2,-0.01,8*10^9}(8*10^9) - phi(8*10^9)", "Theorem 1.4 proof"},
      {"t101_li_gap", "2.4", "<=", "delta(5*10^5) - li(5*10^5)", "Theorem 1.1 proof"},
      {"t103_li_gap", "0.0024", "<", "xi(140000) - li(140000)", "Theorem 1.3 proof"},
      {"z1_2.65", "36917641", "=", "z_1(2.65)", "Theorem 1.5 proof"},
      {"z1_2.65_table", "38168363", ">=", "z_1(2.65)", "Theorem 1.5 proof, Corollary 3.11"},
      {"z2_3.83", "10", "=", "z_2(3.83)", "Theorem 1.5 proof"},
      {"z3_2.65", "36909396", "=", "z_3(2.65)", "Theorem 1.5 proof"},
      {"gap_c", "1.1817", "=", "c in 1 + c/log^3 x", "Theorem 1.5"},
      {"gap_start", "58837", "=", "first x covered by the gap theorem", "Theorem 1.5"},
      {"gap_scan_start", "58889", "=", "scan start of the gap check", "Theorem 1.5 proof"},
      {"gap_window_pi", "5949", "=", "pi(x) for 58837 <= x < 58889", "Theorem 1.5 proof"},
      {"gap_scan_end", "2898239", "=", "Trudgian threshold", "Proposition 4.4"},
      {"trudgian_c", "111", "=", "c in 1 + 1/(c log^2 x)", "Proposition 4.4"},
      {"trudgian_crossover", "131.1687", "=", "log x beyond which Theorem 1.5 improves Proposition 4.4",
       "section 4"},
      {"ramare_saouter_start", "10726905041", "=", "threshold", "Proposition 4.2"},
      {"ramare_saouter_den", "28313999", "=", "denominator", "Proposition 4.2"},
      {"kadiri_lumley_log_start", "150", "=", "log threshold", "Proposition 4.3"},
      {"kadiri_lumley_den", "2442159713", "=", "denominator", "Proposition 4.3"},
      {"g_thm15_start", "1423.728", "=", "log x threshold", "Theorem 1.5 proof"},
      {"g_thm15_floor", "0.056", "<=", "g(y) for y >= 1423.728", "Theorem 1.5 proof"},
      {"t102_threshold", "1332450001", "=", "threshold", "Theorem 1.2"},
      {"t104_threshold", "1332479531", "=", "threshold", "Theorem 1.4"},
      {"eq312_a", "3600", "=", "a", "Proposition 3.3 proof"},
      {"eq312_eps", "6.93e-12", "=", "epsilon_psi for 0 <= i <= 75", "Proposition 3.3 proof"},
      {"eq312_eps_tail", "6.49e-12", "=", "epsilon_psi for 75 <= i <= 100", "Proposition 3.3 proof"},
      {"eq312_bound", "0.35", ">", "left side of the epsilon_psi inequality", "Proposition 3.3 proof"},
      {"eta1", "0.001", "=", "eta_1, x >= 908994923", "Proposition 3.2"},
      {"eta2", "0.01", "=", "eta_2, x >= 7713133853", "Proposition 3.2"},
      {"eta3", "0.78", "=", "eta_3, x >= 158822621", "Proposition 3.2"},
      {"eta4", "1300", "=", "eta_4, x >= 2", "Proposition 3.2"},
      {"eta3_e30", "0.35", "=", "eta_3, x >= e^30", "Proposition 3.3"},
      {"x0_1", "908994923", "=", "x_0(1)", "Proposition 3.2"},
      {"x0_2", "7713133853", "=", "x_0(2)", "Proposition 3.2"},
      {"x0_3", "158822621", "=", "x_0(3)", "Proposition 3.2"},
      {"x0_4", "2", "=", "x_0(4)", "Proposition 3.2"},
  };
  std::vector<PinnedConstant> out;
  for (const Row& r : rows) out.push_back({r.name, exact::parse_rational(r.value), r.relation, r.quantity, r.provenance});
  return out;
}

}  // namespace

const ProofConstants& ProofConstants::builtin() {
  static const ProofConstants constants = [] {
    ProofConstants c;
    c.entries_ = build();
    return c;
  }();
  return constants;
}

const PinnedConstant& ProofConstants::get(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw UnknownName("unknown constant: " + std::string(name));
}

nlohmann::json ProofConstants::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries_) {
    out.push_back({{"name", e.name},
                   {"value", exact::to_string(e.value)},
                   {"relation", e.quantity + " " + e.relation + " value"},
                   {"provenance", e.provenance}});
  }
  return out;
}

}  // namespace pb::bounds
