#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sop/energy_cost.hpp"
#include "sop/mode_spec_io.hpp"

namespace sop::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const CostBreakdown& c) {
  return json{{"alpha_p", c.alpha_p}, {"beta_p", c.beta_p},
              {"alpha_q", c.alpha_q}, {"beta_q", c.beta_q},
              {"gamma_a", c.gamma_a}, {"mu_a", c.mu_a},
              {"gamma_b", c.gamma_b}, {"mu_b", c.mu_b},
              {"kappa", c.kappa}};
}

DeviceState parse_device(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t consumed = 0;
      values.push_back(std::stod(item, &consumed));
      if (consumed != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("device moments must be numeric: '" + text + "'");
    }
  }
  if (values.size() != 3) {
    throw ValidationError("device moments must be 'q2,p2,qp': '" + text + "'");
  }
  return DeviceState(values[0], values[1], values[2]);
}

CostForm parse_form(const std::string& text) {
  return text == "tabulated" ? CostForm::tabulated : CostForm::corrected;
}

void emit(const std::string& payload, const std::string& out_path,
          std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw ValidationError("cannot open output file: " + out_path);
  file << payload;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

struct Options {
  int n = 0;
  double eta = 0.0;
  double delta = 0.0;
  std::string spec_path;
  std::string dev_a = "0.5,0.5,0";
  std::string dev_b = "0.5,0.5,0";
  int points = 99;
  double delta0 = 1e-3;
  double ratio = 2.0;
  int laurent_points = 6;
  std::string form = "corrected";
  std::string format;  // empty: csv for tabular subcommands, json otherwise
  std::string out_path;
};

std::string run_vacuum(const Options& opt) {
  const LatticeSpec spec(opt.n, opt.eta);
  const VacuumCorrelators corr = correlators(spec);
  if (opt.format == "json") {
    json doc{{"n", opt.n}, {"eta", opt.eta}};
    json d = json::array();
    for (int i = 0; i < opt.n; ++i) d.push_back(i);
    doc["d"] = d;
    doc["dq"] = to_json(corr.dq);
    doc["dp"] = to_json(corr.dp);
    return dump(doc);
  }
  std::string text = "d,dq,dp\n";
  for (int d = 0; d < opt.n; ++d) {
    text += std::to_string(d) + "," + fmt(corr.dq(d)) + "," + fmt(corr.dp(d)) + "\n";
  }
  return text;
}

std::string run_mode(const Options& opt) {
  if (opt.format == "csv") throw ValidationError("'mode' only supports --format json");
  const ModeSpec mode_spec = load_mode_spec(opt.spec_path);
  const VacuumCorrelators corr = correlators(mode_spec.spec);
  const Eigen::Matrix2d cov = mode_covariance(mode_spec.window, corr);
  const StandardMode mode = standard_form(mode_spec.window, corr);
  json doc{{"n", mode_spec.spec.n_sites},
           {"eta", mode_spec.spec.eta},
           {"g", mode.g},
           {"nu", mode.nu()},
           {"theta", mode.theta},
           {"theta_prime", mode.theta_prime},
           {"sigma", mode.sigma},
           {"mode_covariance", to_json(Matrix(cov))},
           {"x", to_json(mode.big_x)},
           {"y", to_json(mode.big_y)},
           {"z", to_json(mode.big_z)},
           {"w", to_json(mode.big_w)}};
  return dump(doc);
}

std::string run_partner(const Options& opt) {
  if (opt.format == "csv") throw ValidationError("'partner' only supports --format json");
  const ModeSpec mode_spec = load_mode_spec(opt.spec_path);
  const VacuumCorrelators corr = correlators(mode_spec.spec);
  const PartnerPair pair = partner_window(standard_form(mode_spec.window, corr), corr);
  const auto residuals = check_locality(pair);
  json doc{{"g", pair.g},
           {"s_ee", entanglement_entropy(pair.g)},
           {"classification", to_string(classify_partner(pair))},
           {"residuals", json::array({residuals[0], residuals[1], residuals[2], residuals[3]})},
           {"b_windows", json{{"x", to_json(pair.b_x)},
                              {"y", to_json(pair.b_y)},
                              {"z", to_json(pair.b_z)},
                              {"w", to_json(pair.b_w)}}},
           {"m_ab", to_json(pair.m_ab)}};
  return dump(doc);
}

std::string run_harvest(const Options& opt) {
  if (opt.format == "csv") throw ValidationError("'harvest' only supports --format json");
  const ModeSpec mode_spec = load_mode_spec(opt.spec_path);
  const VacuumCorrelators corr = correlators(mode_spec.spec);
  const PartnerPair pair = partner_window(standard_form(mode_spec.window, corr), corr);
  const HarvestResult result = harvest(pair, parse_device(opt.dev_a),
                                       parse_device(opt.dev_b), mode_spec.spec);
  json doc{{"device_covariance", to_json(result.device_covariance.mat())},
           {"device_entropy", result.device_entropy},
           {"field_mode_marginal", to_json(result.field_mode_marginal.mat())},
           {"spectrum_check", result.spectrum_deviation}};
  return dump(doc);
}

std::string run_cost(const Options& opt) {
  if (opt.format == "csv") throw ValidationError("'cost' only supports --format json");
  const N3Model model = build_n3(opt.eta, opt.delta);
  const DeviceState dev_a = parse_device(opt.dev_a);
  const DeviceState dev_b = parse_device(opt.dev_b);
  const CostBreakdown corrected = cost_coefficients(model, CostForm::corrected);
  const CostBreakdown tabulated = cost_coefficients(model, CostForm::tabulated);
  const CostBreakdown oracle = cost_coefficients_oracle(model);

  const std::array<double, 1> etas = {opt.eta};
  const std::array<double, 1> deltas = {opt.delta};
  json discrepancies = json::array();
  for (const CostDiscrepancy& d :
       compare_cost_paths(etas, deltas, CostForm::tabulated)) {
    discrepancies.push_back(json{{"coefficient", d.coefficient},
                                 {"closed_form", d.closed_form},
                                 {"oracle", d.oracle},
                                 {"rel_error", d.rel_error}});
  }

  json doc{{"eta", opt.eta},
           {"delta", opt.delta},
           {"c_factor", model.c_factor},
           {"g", model.g},
           {"omega", model.omega},
           {"coefficients", to_json(corrected)},
           {"coefficients_tabulated", to_json(tabulated)},
           {"oracle", to_json(oracle)},
           {"delta_e_swap", delta_e_swap(model, dev_a, dev_b)},
           {"delta_e_swap_tabulated",
            delta_e_swap(model, dev_a, dev_b, CostForm::tabulated)},
           {"delta_e_swap_oracle",
            delta_e_swap_oracle(LatticeSpec(3, opt.eta), model, dev_a, dev_b)},
           {"discrepancies", discrepancies}};
  return dump(doc);
}

std::string run_sweep(const Options& opt) {
  const std::vector<SweepRow> rows = phi_sweep(opt.points, parse_form(opt.form),
                                               opt.delta0, opt.ratio,
                                               opt.laurent_points);
  if (opt.format == "json") {
    json doc{{"points", opt.points},
             {"delta0", opt.delta0},
             {"ratio", opt.ratio},
             {"laurent_points", opt.laurent_points},
             {"form", opt.form}};
    json phi = json::array(), km2 = json::array(), km1 = json::array();
    json ga = json::array(), ma = json::array(), gb = json::array(), mb = json::array();
    for (const SweepRow& r : rows) {
      phi.push_back(r.phi);
      km2.push_back(r.kappa_m2);
      km1.push_back(r.kappa_m1);
      ga.push_back(r.gamma_a_m1);
      ma.push_back(r.mu_a_m1);
      gb.push_back(r.gamma_b_m1);
      mb.push_back(r.mu_b_m1);
    }
    doc["phi"] = phi;
    doc["kappa_m2"] = km2;
    doc["kappa_m1"] = km1;
    doc["gamma_a_m1"] = ga;
    doc["mu_a_m1"] = ma;
    doc["gamma_b_m1"] = gb;
    doc["mu_b_m1"] = mb;
    return dump(doc);
  }
  std::string text = "phi,kappa_m2,kappa_m1,gamma_a_m1,mu_a_m1,gamma_b_m1,mu_b_m1\n";
  for (const SweepRow& r : rows) {
    text += fmt(r.phi) + "," + fmt(r.kappa_m2) + "," + fmt(r.kappa_m1) + "," +
            fmt(r.gamma_a_m1) + "," + fmt(r.mu_a_m1) + "," + fmt(r.gamma_b_m1) +
            "," + fmt(r.mu_b_m1) + "\n";
  }
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spatially overlapped partner construction and harvesting toolkit"};
  app.name("sop");
  app.require_subcommand(1);
  Options opt;

  CLI::App* vacuum = app.add_subcommand("vacuum", "ground-state correlators");
  // the correlator sums are O(N^2); keep N at desk scale
  vacuum->add_option("--n", opt.n, "number of lattice sites")->required()
      ->check(CLI::Range(2, 16384));
  vacuum->add_option("--eta", opt.eta, "coupling eta")->required()
      ->check(CLI::NonNegativeNumber);
  vacuum->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  vacuum->add_option("--out", opt.out_path, "output file (default stdout)");

  CLI::App* mode = app.add_subcommand("mode", "standardize a local mode");
  mode->add_option("--spec", opt.spec_path, "mode spec JSON file")->required();
  mode->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  mode->add_option("--out", opt.out_path);

  CLI::App* partner = app.add_subcommand("partner", "purification partner of a mode");
  partner->add_option("--spec", opt.spec_path)->required();
  partner->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  partner->add_option("--out", opt.out_path);

  CLI::App* harvest_cmd = app.add_subcommand("harvest", "swap the pair onto devices");
  harvest_cmd->add_option("--spec", opt.spec_path)->required();
  harvest_cmd->add_option("--dev-a", opt.dev_a, "device A' moments q2,p2,qp");
  harvest_cmd->add_option("--dev-b", opt.dev_b, "device B' moments q2,p2,qp");
  harvest_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  harvest_cmd->add_option("--out", opt.out_path);

  CLI::App* cost = app.add_subcommand("cost", "three-site swap energy cost");
  cost->add_option("--eta", opt.eta)->required()->check(CLI::PositiveNumber);
  cost->add_option("--delta", opt.delta)->required()->check(CLI::PositiveNumber);
  cost->add_option("--dev-a", opt.dev_a);
  cost->add_option("--dev-b", opt.dev_b);
  cost->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  cost->add_option("--out", opt.out_path);

  CLI::App* sweep = app.add_subcommand("sweep", "small-delta cost coefficients over eta");
  sweep->add_option("--points", opt.points, "number of phi grid points")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--delta0", opt.delta0)->check(CLI::PositiveNumber);
  sweep->add_option("--ratio", opt.ratio);
  sweep->add_option("--npoints-laurent", opt.laurent_points)->check(CLI::Range(6, 64));
  sweep->add_option("--form", opt.form)->check(CLI::IsMember({"corrected", "tabulated"}));
  sweep->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", opt.out_path);

  std::vector<std::string> argv_storage = {"sop"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string payload;
    if (vacuum->parsed()) payload = run_vacuum(opt);
    else if (mode->parsed()) payload = run_mode(opt);
    else if (partner->parsed()) payload = run_partner(opt);
    else if (harvest_cmd->parsed()) payload = run_harvest(opt);
    else if (cost->parsed()) payload = run_cost(opt);
    else if (sweep->parsed()) payload = run_sweep(opt);
    emit(payload, opt.out_path, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace sop::cli
