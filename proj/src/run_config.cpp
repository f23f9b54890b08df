#include "haus/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "haus/analysis.hpp"
#include "haus/experiments.hpp"
#include "haus/fourier.hpp"
#include "haus/moduli.hpp"
#include "haus/operators.hpp"

namespace haus {

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse number: " + item);
    }
  }
  return out;
}

std::string csv_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
  if (key == "command") command = value;
  else if (key == "operator") op_name = value;
  else if (key == "function") fn_name = value;
  else if (key == "alpha") alpha = std::stod(value);
  else if (key == "rl_alpha") rl_alpha = std::stod(value);
  else if (key == "p") p_str = value;
  else if (key == "N") n_list = parse_double_list(value);
  else if (key == "target") target = value;
  else if (key == "kind") kind = value;
  else if (key == "x") x_list = parse_double_list(value);
  else if (key == "deltas") deltas = parse_double_list(value);
  else if (key == "out") out_path = value;
  else if (key == "tol") tol = std::stod(value);
  else throw ConfigError("unknown config key: " + key);
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) apply_kv(key, value);
  }
}

namespace {

QuadratureConfig quad_config(const RunConfig& cfg) {
  QuadratureConfig q = QuadratureConfig::oscillatory();
  if (cfg.tol > 0) {
    q.abs_tol = cfg.tol;
    q.rel_tol = cfg.tol;
  }
  return q;
}

std::vector<double> x_grid_for(const RunConfig& cfg, const TestFunction& f) {
  if (!cfg.x_list.empty()) return cfg.x_list;
  return study_grid(f).points;
}

void cmd_apply(const RunConfig& cfg, std::string& csv) {
  const auto entry = operators::by_name(cfg.op_name, cfg.rl_alpha);
  const auto f = functions::by_name(cfg.fn_name, cfg.alpha);
  const auto q = quad_config(cfg);
  csv += "x,value\n";
  for (double x : x_grid_for(cfg, f)) {
    const double v = cfg.target == "forward"
                         ? hausdorff_apply(entry.spec, f, x, q)
                         : adjoint_apply(entry.spec, f, x, q);
    csv += csv_number(x) + "," + csv_number(v) + "\n";
  }
}

void cmd_approximate(const RunConfig& cfg, std::string& csv) {
  const auto entry = operators::by_name(cfg.op_name, cfg.rl_alpha);
  const auto f = functions::by_name(cfg.fn_name, cfg.alpha);
  const auto q = quad_config(cfg);
  std::vector<double> xs = x_grid_for(cfg, f);
  GridSpec grid(xs, GridRole::XGrid);

  csv += "x,N,approximant,target,abs_error,tail_error_estimate\n";
  for (double N : cfg.n_list) {
    ApproximantResult a;
    std::vector<double> ref(xs.size());
    if (cfg.target == "forward") {
      a = adjoint_variant_approximant(entry.spec, f, N, grid, q);
      for (std::size_t i = 0; i < xs.size(); ++i)
        ref[i] = hausdorff_apply(entry.spec, f, xs[i], q);
    } else if (cfg.target == "recover") {
      a = function_recovery(entry.spec, f, N, grid, q);
      for (std::size_t i = 0; i < xs.size(); ++i) ref[i] = f.eval(xs[i]);
    } else {
      a = truncated_approximant(entry.spec, f, N, grid, q);
      for (std::size_t i = 0; i < xs.size(); ++i)
        ref[i] = adjoint_apply(entry.spec, f, xs[i], q);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      csv += csv_number(xs[i]) + "," + csv_number(N) + "," +
             csv_number(a.values[i]) + "," + csv_number(ref[i]) + "," +
             csv_number(std::fabs(a.values[i] - ref[i])) + "," +
             csv_number(a.diagnostics[i].tail_error) + "\n";
    }
  }
}

void cmd_study(const RunConfig& cfg, std::string& csv) {
  const auto q = quad_config(cfg);
  const auto f = functions::by_name(cfg.fn_name, cfg.alpha);
  const auto p = LebesgueExponent::parse(cfg.p_str);

  std::string kind = cfg.kind;
  if (kind == "auto") {
    if (cfg.op_name == "fejer") kind = "fejer";
    else if (cfg.target == "recover") kind = "recovery";
    else kind = "convergence";
  }

  if (kind == "divergence") {
    GridSpec ladder(cfg.n_list, GridRole::SGrid);
    const ModulusFn omega = modulus_function(f, LebesgueExponent::infinity(), q);
    auto rows = bellman_divergence_demo(ladder, omega, q);
    csv += "S,bound,cesaro_control\n";
    for (const auto& r : rows)
      csv += csv_number(r.S) + "," + csv_number(r.bellman_bound) + "," +
             csv_number(r.cesaro_bound) + "\n";
    return;
  }

  RateReport report;
  GridSpec ladder(cfg.n_list, GridRole::NLadder);
  if (kind == "fejer") {
    report = approximate_identity_study(f, p, ladder, q);
  } else if (kind == "recovery") {
    const auto entry = operators::by_name(cfg.op_name, cfg.rl_alpha);
    GridSpec ygrid = GridSpec::linear(-2.0, 2.0, 21, GridRole::XGrid);
    report = recovery_study(entry.spec, f, ladder, ygrid, q);
  } else {
    const auto entry = operators::by_name(cfg.op_name, cfg.rl_alpha);
    const StudyTarget target = cfg.target == "forward" ? StudyTarget::Forward
                                                       : StudyTarget::Adjoint;
    report = convergence_study(entry.spec, f, target, p, ladder, q);
  }

  csv += "N,error,bound,log_ratio\n";
  for (std::size_t i = 0; i < report.n_ladder.size(); ++i)
    csv += csv_number(report.n_ladder[i]) + "," +
           csv_number(report.errors[i]) + "," +
           csv_number(report.bound_values[i]) + "," +
           csv_number(report.log_corrected_ratio[i]) + "\n";
  csv += "slope," + csv_number(report.fitted_slope) + "," +
         csv_number(report.predicted_slope) + ",\n";
}

void cmd_modulus(const RunConfig& cfg, std::string& csv) {
  const auto f = functions::by_name(cfg.fn_name, cfg.alpha);
  const auto p = LebesgueExponent::parse(cfg.p_str);
  const auto q = quad_config(cfg);
  csv += "delta,estimate,analytic,refinement_gap\n";
  auto ladder = modulus_ladder(f, cfg.deltas, p, q);
  for (const auto& e : ladder) {
    double analytic = std::numeric_limits<double>::quiet_NaN();
    if (f.analytic_modulus) analytic = f.analytic_modulus(e.delta, p);
    csv += csv_number(e.delta) + "," + csv_number(e.value) + "," +
           csv_number(analytic) + "," + csv_number(e.refinement_gap) + "\n";
  }
}

void cmd_bounds(const RunConfig& cfg, std::string& csv) {
  const auto entry = operators::by_name(cfg.op_name, cfg.rl_alpha);
  const auto f = functions::by_name(cfg.fn_name, cfg.alpha);
  const auto p = LebesgueExponent::parse(cfg.p_str);
  const auto q = quad_config(cfg);
  const ModulusFn omega = modulus_function(f, p, q);
  const double cap = 2.0 * lp_norm(f, p, q);

  auto opt = [](const std::optional<double>& v) {
    return v ? csv_number(*v) : std::string("inf");
  };
  csv += "N,term1,term2,total,normalizer,error_bound\n";
  for (double N : cfg.n_list) {
    BoundReport b = p.is_infinite()
                        ? theorem2_rhs(entry.spec, omega, N, cap, q)
                        : theorem1_rhs(entry.spec, omega, N, p, cap, q);
    csv += csv_number(N) + "," + opt(b.term1) + "," + opt(b.term2) + "," +
           opt(b.total) + "," + csv_number(b.normalizer) + "," +
           opt(b.error_bound()) + "\n";
  }
}

}  // namespace

int run_command(const RunConfig& cfg, std::string& csv, std::string* error) {
  auto record = [error](const std::exception& e) {
    if (error) *error = e.what();
  };
  try {
    if (cfg.command == "apply") cmd_apply(cfg, csv);
    else if (cfg.command == "approximate") cmd_approximate(cfg, csv);
    else if (cfg.command == "study") cmd_study(cfg, csv);
    else if (cfg.command == "modulus") cmd_modulus(cfg, csv);
    else if (cfg.command == "bounds") cmd_bounds(cfg, csv);
    else throw ConfigError("unknown command: " + cfg.command);
    return 0;
  } catch (const ConfigError& e) {
    record(e);
    return 2;
  } catch (const UnknownClass& e) {
    record(e);
    return 2;
  } catch (const std::exception& e) {
    record(e);
    return 3;
  }
}

}  // namespace haus
