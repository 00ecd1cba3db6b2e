// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff every executed
// criterion passed. Options: --criterion N (run a single criterion), --list.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sop/energy_cost.hpp"
#include "test_support.hpp"

using namespace sop;
namespace st = sop::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Partner purity, locality and pair pattern for 200 random windows.
Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  double worst_purity = 0.0, worst_locality = 0.0, worst_pattern = 0.0;
  int constructed = 0;
  const std::vector<double> etas = {0.1, 1.0, 10.0};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = st::uniform_int(3, 32);
    const double eta = etas[static_cast<size_t>(st::uniform_int(0, 2))];
    const VacuumCorrelators corr = correlators(LatticeSpec(n, eta));
    const StandardMode mode = standard_form(st::random_no_mixing_window(n), corr);
    if (mode.g <= 1e-10) continue;  // a random window is never exactly pure
    const PartnerPair pair = partner_window(mode, corr);
    ++constructed;

    for (double nu : williamson_eigenvalues(CovarianceMatrix(pair.m_ab))) {
      worst_purity = std::max(worst_purity, std::abs(nu - 0.5));
    }
    for (double r : check_locality(pair)) worst_locality = std::max(worst_locality, r);
    worst_pattern =
        std::max(worst_pattern,
                 (pair.m_ab - st::pure_pair_pattern(pair.g)).cwiseAbs().maxCoeff());
  }
  const double elapsed = seconds_since(start);
  const bool pass = constructed == 200 && worst_purity <= 1e-8 &&
                    worst_locality < 1e-10 && worst_pattern <= 1e-8 && elapsed < 10.0;
  return {pass, std::to_string(constructed) + " pairs, worst purity " +
                    num(worst_purity) + ", locality " + num(worst_locality) +
                    ", pattern " + num(worst_pattern) + ", " + num(elapsed) + " s"};
}

// 2. Entropy closed form against the spectral oracle.
Outcome criterion_2() {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double g = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    worst = std::max(worst, rel(entanglement_entropy(g),
                                gaussian_entropy({0.5 * std::sqrt(1.0 + g * g)})));
  }
  const bool zero_exact = entanglement_entropy(0.0) == 0.0;
  return {worst <= 1e-9 && zero_exact,
          "worst relative deviation " + num(worst) + ", S(0) == 0: " +
              (zero_exact ? "yes" : "no")};
}

// 3. Single-site mode on the three-site chain stays finite.
Outcome criterion_3() {
  const VacuumCorrelators corr = correlators(LatticeSpec(3, 1.0));
  Vector x = Vector::Zero(3), w = Vector::Zero(3);
  x(0) = 1.0;
  w(0) = 1.0;
  const double g = g_factor(WindowFunctions::no_mixing(x, w), corr);
  const double entropy = entanglement_entropy(g);
  const bool pass = std::abs(g - 1.0 / 3.0) <= 1e-12 && std::abs(entropy - 0.125053) <= 1e-5;
  return {pass, "g = " + num(g) + " (target 1/3), S = " + num(entropy) +
                    " (oracle 0.1250514...)"};
}

// 4. Narrow-window divergences of g and the entropy.
Outcome criterion_4() {
  const VacuumCorrelators corr = correlators(LatticeSpec(3, 1.0));
  std::vector<double> xs, log_g, entropy;
  for (int i = 0; i <= 8; ++i) {
    const double delta = 1e-5 * std::pow(10.0, 0.25 * i);
    const double g = g_factor(st::two_site_window(3, delta), corr);
    xs.push_back(std::log(1.0 / delta));
    log_g.push_back(std::log(g));
    entropy.push_back(entanglement_entropy(g));
  }
  const double g_slope = st::fit_slope(xs, log_g);
  const double s_slope = st::fit_slope(xs, entropy);
  const bool pass = std::abs(g_slope - 1.0) <= 0.01 && std::abs(s_slope - 1.0) <= 0.02;
  return {pass, "slope(ln g) = " + num(g_slope) + ", slope(S) = " + num(s_slope)};
}

// 5. Harvest transfers the pair state exactly, for vacuum and squeezed devices.
Outcome criterion_5() {
  const LatticeSpec spec(3, 1.0);
  const VacuumCorrelators corr = correlators(spec);
  const PartnerPair pair =
      partner_window(standard_form(st::two_site_window(3, 1.0), corr), corr);

  double worst_marginal = 0.0, worst_entropy = 0.0, worst_spectrum = 0.0;
  const std::vector<std::pair<DeviceState, DeviceState>> devices = {
      {DeviceState::vacuum(), DeviceState::vacuum()},
      {DeviceState(2.0, 0.125, 0.0), DeviceState::vacuum()},
      {DeviceState(2.0, 0.125, 0.0), DeviceState(2.0, 0.125, 0.0)}};
  for (const auto& [dev_a, dev_b] : devices) {
    const HarvestResult result = harvest(pair, dev_a, dev_b, spec);
    worst_marginal = std::max(
        worst_marginal,
        (result.device_covariance.mat() - pair.m_ab).cwiseAbs().maxCoeff());
    worst_entropy = std::max(
        worst_entropy, std::abs(result.device_entropy - entanglement_entropy(pair.g)));
    worst_spectrum = std::max(worst_spectrum, result.spectrum_deviation);
  }
  const bool pass =
      worst_marginal <= 1e-9 && worst_entropy <= 1e-8 && worst_spectrum <= 1e-8;
  return {pass, "worst marginal " + num(worst_marginal) + ", entropy " +
                    num(worst_entropy) + ", spectrum " + num(worst_spectrum)};
}

// 6. Closed forms against the symplectic oracle, with the documented defect.
Outcome criterion_6() {
  const std::vector<double> etas = {0.1, 1.0, 10.0};
  const std::vector<double> deltas = {0.01, 0.1, 1.0};
  const auto corrected = compare_cost_paths(etas, deltas, CostForm::corrected);
  const auto tabulated = compare_cost_paths(etas, deltas, CostForm::tabulated);

  // Every tabulated mismatch must trace back to the one documented defect in
  // the alpha_q table entry (kappa and the assembled cost inherit it).
  bool only_known_defect = true;
  for (const CostDiscrepancy& d : tabulated) {
    if (d.coefficient != "alpha_q" && d.coefficient != "kappa" &&
        d.coefficient.rfind("delta_e_swap", 0) != 0) {
      only_known_defect = false;
    }
  }

  nlohmann::json report;
  report["corrected_path_mismatches"] = nlohmann::json::array();
  for (const CostDiscrepancy& d : corrected) {
    report["corrected_path_mismatches"].push_back(
        {{"coefficient", d.coefficient}, {"eta", d.eta}, {"delta", d.delta},
         {"closed_form", d.closed_form}, {"oracle", d.oracle},
         {"rel_error", d.rel_error}});
  }
  report["tabulated_path_mismatches"] = nlohmann::json::array();
  for (const CostDiscrepancy& d : tabulated) {
    report["tabulated_path_mismatches"].push_back(
        {{"coefficient", d.coefficient}, {"eta", d.eta}, {"delta", d.delta},
         {"closed_form", d.closed_form}, {"oracle", d.oracle},
         {"rel_error", d.rel_error}, {"documented_defect", true}});
  }
  report["note"] =
      "The tabulated alpha_q expression is inconsistent with the operator "
      "expansion it was collected from; the corrected collection (CostForm::"
      "corrected, the production default) agrees with the symplectic oracle "
      "everywhere. See README 'Known defect in the coefficient table'.";
  std::ofstream("cost_discrepancy_report.json") << report.dump(2) << "\n";

  const bool pass = corrected.empty() && only_known_defect;
  return {pass, "corrected-path mismatches: " + std::to_string(corrected.size()) +
                    "; tabulated-path mismatches: " + std::to_string(tabulated.size()) +
                    " (all alpha_q-derived: " + (only_known_defect ? "yes" : "no") +
                    "); report: cost_discrepancy_report.json"};
}

// 7. Stated narrow-window exponent of the swap energy cost.
Outcome criterion_7() {
  const DeviceState vacuum = DeviceState::vacuum();
  std::vector<double> xs, ys, ys_tab;
  for (int i = 0; i <= 8; ++i) {
    const double delta = 1e-5 * std::pow(10.0, 0.25 * i);
    const N3Model model = build_n3(1.0, delta);
    xs.push_back(std::log(1.0 / delta));
    ys.push_back(std::log(delta_e_swap(model, vacuum, vacuum)));
    ys_tab.push_back(std::log(delta_e_swap(model, vacuum, vacuum, CostForm::tabulated)));
  }
  const double slope = st::fit_slope(xs, ys);
  const double slope_tab = st::fit_slope(xs, ys_tab);
  const bool pass = std::abs(slope - 2.0) <= 0.01;
  return {pass,
          "measured slope " + num(slope) + " (criterion demands 2 +- 0.01). The "
          "exact swap cost diverges like 1/delta: its kappa part stays finite and "
          "only the device-coupled 1/delta coefficients diverge. The 1/delta^2 "
          "claim reproduces only through the defective tabulated alpha_q entry "
          "(tabulated-path slope " + num(slope_tab) + "); see README and "
          "cost_discrepancy_report.json"};
}

// 8. Small-delta coefficient positivity and symmetry over the coupling range.
Outcome criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepRow> rows = phi_sweep(99);
  const std::vector<SweepRow> tab_rows = phi_sweep(99, CostForm::tabulated);
  const double elapsed = seconds_since(start);

  double min_km2 = 1e300, min_km1 = 1e300, min_gm = 1e300, worst_mu_rel = 0.0;
  for (const SweepRow& r : rows) {
    min_km2 = std::min(min_km2, r.kappa_m2);
    min_km1 = std::min(min_km1, r.kappa_m1);
    min_gm = std::min({min_gm, r.gamma_a_m1, r.mu_a_m1, r.gamma_b_m1, r.mu_b_m1});
    worst_mu_rel = std::max(worst_mu_rel, rel(r.mu_a_m1, r.mu_b_m1));
  }
  double tab_min_km2 = 1e300, tab_min_km1 = 1e300;
  for (const SweepRow& r : tab_rows) {
    tab_min_km2 = std::min(tab_min_km2, r.kappa_m2);
    tab_min_km1 = std::min(tab_min_km1, r.kappa_m1);
  }

  const bool kappa_positive = min_km2 > 0.0 && min_km1 > 0.0;
  const bool couplings_positive = min_gm > 0.0;
  const bool mu_equal = worst_mu_rel <= 1e-6;
  const bool pass = kappa_positive && couplings_positive && mu_equal && elapsed < 10.0;
  return {pass,
          "gamma/mu^(-1) min " + num(min_gm) + " (> 0: " +
              (couplings_positive ? "yes" : "no") + "), mu_A'=mu_B' worst rel " +
              num(worst_mu_rel) + " (pass: " + (mu_equal ? "yes" : "no") +
              "), kappa^(-2) min " + num(min_km2) + ", kappa^(-1) min " + num(min_km1) +
              " (strict positivity fails: the exact-swap kappa has no divergent "
              "part, both coefficients vanish; even the tabulated table gives "
              "kappa^(-2) min " + num(tab_min_km2) + " > 0 but kappa^(-1) min " +
              num(tab_min_km1) + " < 0), " + num(elapsed) + " s"};
}

// 9. Ladder-basis conditions for standardized modes.
Outcome criterion_9() {
  const std::vector<double> etas = {0.1, 1.0, 10.0};
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = st::uniform_int(3, 32);
    const LatticeSpec spec(n, etas[static_cast<size_t>(st::uniform_int(0, 2))]);
    const VacuumCorrelators corr = correlators(spec);
    const WindowFunctions win =
        trial % 2 == 0 ? st::random_no_mixing_window(n) : st::random_mixed_window(n);
    const StandardMode mode = standard_form(win, corr);
    const MomentumRepresentation rep = momentum_representation(mode, spec);

    worst = std::max(worst, std::abs(rep.q.squaredNorm() - 1.0));
    worst = std::max(worst, std::abs(rep.p.squaredNorm() - 1.0));
    const std::complex<double> overlap = rep.p.dot(rep.q);
    const std::complex<double> target(0.0, -1.0 / std::sqrt(1.0 + mode.g * mode.g));
    worst = std::max(worst, std::abs(overlap - target));
  }
  return {worst <= 1e-9, "worst condition deviation " + num(worst)};
}

// 10. Laurent extractor self-test on synthetic series. The samples are taken
// in double precision, so the representation error of f(delta0) ~ a/delta0^2
// bounds how well the constant term can be recovered; the draw range keeps
// the coefficient scales within a factor 16 of each other.
Outcome criterion_10() {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double a = st::uniform(0.25, 4.0) * (st::uniform_int(0, 1) ? 1.0 : -1.0);
    const double b = st::uniform(0.25, 4.0) * (st::uniform_int(0, 1) ? 1.0 : -1.0);
    const double c = st::uniform(0.25, 4.0) * (st::uniform_int(0, 1) ? 1.0 : -1.0);
    const LaurentSeries series = laurent_extract(
        [&](double d) { return a / (d * d) + b / d + c; }, -2, 3);
    worst = std::max({worst, rel(series.at(-2), a), rel(series.at(-1), b),
                      rel(series.at(0), c)});
  }
  return {worst <= 1e-8, "worst relative error " + num(worst)};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "partner purity, locality and pair pattern for 200 random windows", criterion_1},
    {2, "entropy closed form vs spectral oracle over g in [1e-3, 1e3]", criterion_2},
    {3, "single-site mode: g = 1/3 and finite entropy", criterion_3},
    {4, "narrow-window divergences: g ~ 1/delta, S ~ ln(1/delta)", criterion_4},
    {5, "harvest correctness for vacuum and squeezed devices", criterion_5},
    {6, "closed-form cost coefficients vs symplectic oracle", criterion_6},
    {7, "energy-cost divergence exponent", criterion_7},
    {8, "coefficient positivity and mu symmetry over the coupling range", criterion_8},
    {9, "ladder-basis conditions for 50 random standardized modes", criterion_9},
    {10, "Laurent extractor self-test", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--list") {
      for (const Criterion& c : kCriteria) {
        std::cout << c.id << ": " << c.title << "\n";
      }
      return 0;
    }
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: sop_acceptance [--list] [--criterion N]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.id != selected) continue;
    const Outcome outcome = c.run();
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id
              << ": " << c.title << " -- " << outcome.detail << "\n";
    if (!outcome.pass) ++failures;
  }
  if (selected == 0) {
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}
