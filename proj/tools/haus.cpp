#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "haus/run_config.hpp"

namespace {

struct CliOptions {
  haus::RunConfig cfg;
  std::string n_csv, x_csv, deltas_csv;
};

void add_common(CLI::App* sub, CliOptions& o) {
  sub->add_option("--operator", o.cfg.op_name,
                  "cesaro | bellman | riemann-liouville | fejer (study)");
  sub->add_option("--function", o.cfg.fn_name,
                  "const1 | plateau | indicator01 | indicator12 | tent | cusp"
                  " | gaussian | fejer | mollified12 | bump");
  sub->add_option("--alpha", o.cfg.alpha, "function-class exponent (cusp)");
  sub->add_option("--rl-alpha", o.cfg.rl_alpha,
                  "Riemann-Liouville kernel exponent");
  sub->add_option("--p", o.cfg.p_str, "Lebesgue exponent (number or 'inf')");
  sub->add_option("--N", o.n_csv, "comma list of truncation parameters");
  sub->add_option("--target", o.cfg.target, "adjoint | forward | recover");
  sub->add_option("--kind", o.cfg.kind,
                  "study kind: auto | convergence | fejer | divergence |"
                  " recovery");
  sub->add_option("--x", o.x_csv, "comma list of evaluation points");
  sub->add_option("--deltas", o.deltas_csv, "comma list of delta values");
  sub->add_option("--out", o.cfg.out_path, "write CSV here as well");
  sub->add_option("--tol", o.cfg.tol, "quadrature tolerance override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hausdorff operators and truncated-Fourier "
               "approximants"};
  app.require_subcommand(1);

  CliOptions o;

  // Config file first, flags override (later wins).
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  if (!config_path.empty()) {
    try {
      o.cfg.load_file(config_path);
    } catch (const std::exception& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }
  app.add_option("--config", config_path, "key = value config file");

  for (const char* name : {"apply", "approximate", "study", "modulus",
                           "bounds"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, o);
    sub->callback([&o, name] { o.cfg.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (!o.n_csv.empty()) o.cfg.n_list = haus::parse_double_list(o.n_csv);
    if (!o.x_csv.empty()) o.cfg.x_list = haus::parse_double_list(o.x_csv);
    if (!o.deltas_csv.empty())
      o.cfg.deltas = haus::parse_double_list(o.deltas_csv);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  std::string csv, error;
  const int code = haus::run_command(o.cfg, csv, &error);
  if (code != 0) {
    std::cerr << (code == 2 ? "config error: " : "numerical failure: ")
              << error << "\n";
    return code;
  }
  std::cout << csv;
  if (!o.cfg.out_path.empty()) {
    std::ofstream out(o.cfg.out_path, std::ios::trunc | std::ios::binary);
    if (!out) {
      std::cerr << "config error: cannot write " << o.cfg.out_path << "\n";
      return 2;
    }
    out << csv;
  }
  return 0;
}
