#pragma once

#include <string>
#include <vector>

#include "haus/types.hpp"

namespace haus {

// Flat configuration shared by the CLI subcommands.  Values come from a
// key = value config file first, then command-line overrides (later wins).
struct RunConfig {
  std::string command = "apply";  // apply | approximate | study | modulus | bounds
  std::string op_name = "cesaro";
  double rl_alpha = 1.0;  // Riemann-Liouville kernel exponent
  std::string fn_name = "tent";
  double alpha = 0.5;  // function-class parameter (cusp exponent)
  std::string p_str = "inf";
  std::vector<double> n_list = {8, 16, 32, 64, 128, 256};
  std::string target = "adjoint";  // adjoint | forward | recover
  std::string kind = "auto";       // auto | convergence | fejer | divergence | recovery
  std::vector<double> x_list;      // empty: derived from the support window
  std::vector<double> deltas = {0.001, 0.01, 0.1, 0.25, 0.5, 1.0};
  std::string out_path;  // empty: stdout only
  double tol = 0.0;      // 0: engine defaults

  void apply_kv(const std::string& key, const std::string& value);
  void load_file(const std::string& path);
};

std::vector<double> parse_double_list(const std::string& csv);

// Formats with 12 significant digits, '.' decimal, no separators.
std::string csv_number(double v);

// Runs the configured command, filling the CSV text (header row included).
// Returns the process exit code: 0 success, 2 configuration error,
// 3 numerical failure.  The failure message lands in *error when given.
int run_command(const RunConfig& cfg, std::string& csv,
                std::string* error = nullptr);

}  // namespace haus
