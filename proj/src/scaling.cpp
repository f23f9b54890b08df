#include "haus/scaling.hpp"

#include <cmath>

namespace haus {

namespace {

std::vector<double> default_witness() {
  // Logarithmic grid over six decades.
  std::vector<double> g;
  for (int i = 0; i <= 120; ++i) g.push_back(std::pow(10.0, -3.0 + 0.05 * i));
  return g;
}

}  // namespace

ScalingValidation validate_scaling(const ScalingSpec& a) {
  ScalingValidation report;
  auto fail = [&](const std::string& what, double at) {
    report.passed = false;
    report.failure = what;
    report.violating_point = at;
  };

  const auto& grid = a.abs_monotone_witness;
  if (grid.empty()) {
    fail("empty witness grid", 0.0);
    return report;
  }
  for (double t : grid) {
    const double plus = a.eval(t);
    const double minus = a.eval(-t);
    if (std::fabs(plus + minus) > 1e-12 * (1.0 + std::fabs(plus))) {
      fail("oddness violated", t);
      return report;
    }
  }
  double prev = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    const double m = std::fabs(a.eval(t));
    if (!(m > 0)) {
      fail("|a| not positive", t);
      return report;
    }
    if (!(m < prev)) {
      fail("|a| not strictly decreasing", t);
      return report;
    }
    prev = m;
  }
  for (double t : grid) {
    const double u = a.eval(t);
    const double back = a.eval(a.inv(u));
    if (std::fabs(back - u) > 1e-10 * (1.0 + std::fabs(u))) {
      fail("inverse round trip violated", t);
      return report;
    }
  }
  return report;
}

namespace scalings {

ScalingSpec reciprocal() { return reciprocal_power(1.0); }

ScalingSpec reciprocal_power(double power) {
  if (!(power > 0)) throw ConfigError("scaling power must be positive");
  ScalingSpec s;
  s.name = power == 1.0 ? "1/t" : "t^-" + std::to_string(power);
  s.eval = [power](double t) {
    if (t == 0.0) throw ZeroArgument("scaling undefined at t = 0");
    const double m = std::pow(std::fabs(t), -power);
    return t > 0 ? m : -m;
  };
  s.inv = [power](double u) {
    if (u == 0.0) throw ZeroArgument("scaling inverse undefined at u = 0");
    const double m = std::pow(std::fabs(u), -1.0 / power);
    return u > 0 ? m : -m;
  };
  s.abs_monotone_witness = default_witness();
  return s;
}

}  // namespace scalings
}  // namespace haus
