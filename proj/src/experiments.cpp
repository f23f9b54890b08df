#include "haus/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "haus/analysis.hpp"
#include "haus/moduli.hpp"
#include "haus/parallel.hpp"
#include "haus/special.hpp"

namespace haus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kErrorFloor = 1e-12;

double grid_norm(const std::vector<double>& x, const std::vector<double>& e,
                 const LebesgueExponent& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double v : e) m = std::max(m, std::fabs(v));
    return m;
  }
  // Trapezoid weights on the (possibly non-uniform) grid.
  const double pv = p.value();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = (i == 0) ? x[0] : 0.5 * (x[i - 1] + x[i]);
    const double hi = (i + 1 == x.size()) ? x.back() : 0.5 * (x[i] + x[i + 1]);
    sum += std::pow(std::fabs(e[i]), pv) * (hi - lo);
  }
  return std::pow(sum, 1.0 / pv);
}

double slope_of_modulus(const ModulusFn& omega) {
  const double d1 = 1e-3, d2 = 1e-2;
  const double w1 = omega(d1), w2 = omega(d2);
  if (w1 <= 0.0 || w2 <= 0.0) return 0.0;
  return std::log(w2 / w1) / std::log(d2 / d1);
}

}  // namespace

GridSpec study_grid(const TestFunction& f) {
  // 4x the effective support radius (capped for plateau-like inputs).
  const double W = 4.0 * std::min(f.support_radius, 8.0);
  std::vector<double> pts;
  const int n = 81;
  for (int i = 0; i < n; ++i) pts.push_back(-W + 2.0 * W * i / (n - 1));
  for (double b : f.breakpoints) {
    for (double off : {-0.11, -0.045, -0.015, 0.0, 0.015, 0.045, 0.11}) {
      const double x = b + off;
      if (std::fabs(x) <= W) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return GridSpec(std::move(pts), GridRole::XGrid);
}

namespace {

// Norm grid for finite p: uniform base plus logarithmic clusters around the
// jump images ({0} and the breakpoints), so width-1/N spikes and ringing
// tails are sampled at every scale with multiplicative (rate-preserving)
// rather than additive error.
GridSpec norm_grid(const TestFunction& f) {
  const double W = 4.0 * std::min(f.support_radius, 8.0);
  std::vector<double> pts;
  const int n = 1025;
  for (int i = 0; i < n; ++i) pts.push_back(-W + 2.0 * W * i / (n - 1));
  std::vector<double> centers = f.breakpoints;
  centers.push_back(0.0);
  for (double b : centers) {
    if (std::fabs(b) > W) continue;
    pts.push_back(b);
    for (double off = 1e-4; off < 0.9; off *= 1.6) {
      if (b + off < W) pts.push_back(b + off);
      if (b - off > -W) pts.push_back(b - off);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return GridSpec(std::move(pts), GridRole::XGrid);
}

}  // namespace

ModulusFn modulus_function(const TestFunction& f, const LebesgueExponent& p,
                           const QuadratureConfig& q) {
  if (f.analytic_modulus) {
    auto m = f.analytic_modulus;
    return [m, p](double d) { return d <= 0 ? 0.0 : m(d, p); };
  }
  // Monotone log-space interpolant of grid-sup estimates.
  std::vector<double> deltas;
  for (int i = 0; i <= 16; ++i)
    deltas.push_back(std::pow(10.0, -4.0 + 4.5 * i / 16.0));
  auto ladder = modulus_ladder(f, deltas, p, q, 16);
  std::vector<double> values;
  for (const auto& e : ladder) values.push_back(e.value);
  return [deltas, values](double d) {
    if (d <= 0.0) return 0.0;
    if (d <= deltas.front())
      return values.front() * d / deltas.front();  // conservative linear head
    if (d >= deltas.back()) return values.back();
    auto it = std::upper_bound(deltas.begin(), deltas.end(), d);
    const std::size_t i = it - deltas.begin();
    const double t = (std::log(d) - std::log(deltas[i - 1])) /
                     (std::log(deltas[i]) - std::log(deltas[i - 1]));
    return values[i - 1] + t * (values[i] - values[i - 1]);
  };
}

RateFit fit_rate(const std::vector<double>& n_ladder,
                 const std::vector<double>& errors) {
  if (n_ladder.size() != errors.size() || n_ladder.size() < 3)
    throw DegenerateZeroError("rate fit needs at least 3 ladder points");
  for (double e : errors)
    if (!(e > kErrorFloor))
      throw DegenerateZeroError("error at or below the numerical floor");
  for (double n : n_ladder)
    if (!(n > 0)) throw OutOfRange("ladder values must be positive");

  const std::size_t m = n_ladder.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = std::log(n_ladder[i]);
    const double yi = std::log(errors[i]);
    sx += xi; sy += yi; sxx += xi * xi; sxy += xi * yi; syy += yi * yi;
  }
  const double det = m * sxx - sx * sx;
  RateFit fit;
  fit.slope = (m * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / m;
  const double ss_res = syy - sy * sy / m - fit.slope * (sxy - sx * sy / m);
  const double ss_tot = syy - sy * sy / m;
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

RateReport convergence_study(const HausdorffOperatorSpec& op,
                             const TestFunction& f, StudyTarget target,
                             const LebesgueExponent& p,
                             const GridSpec& n_ladder,
                             const QuadratureConfig& q) {
  if (n_ladder.size() < 4)
    throw ConfigError("convergence study needs at least 4 ladder points");

  RateReport report;
  report.operator_name = op.name;
  report.f_label = f.label;
  report.p = p;
  report.n_ladder = n_ladder.points;

  const GridSpec grid = p.is_infinite() ? study_grid(f) : norm_grid(f);
  std::vector<double> ref(grid.size());
  parallel_for_index(grid.size(), [&](std::size_t i) {
    ref[i] = (target == StudyTarget::Adjoint)
                 ? adjoint_apply(op, f, grid.points[i], q)
                 : hausdorff_apply(op, f, grid.points[i], q);
  });

  const ModulusFn omega = modulus_function(f, p, q);
  const double cap = 2.0 * lp_norm(f, p, q);

  for (double N : n_ladder.points) {
    ApproximantResult approx =
        (target == StudyTarget::Adjoint)
            ? truncated_approximant(op, f, N, grid, q)
            : adjoint_variant_approximant(op, f, N, grid, q);
    std::vector<double> diff(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      diff[i] = approx.values[i] - ref[i];
    const double err = grid_norm(grid.points, diff, p);
    report.errors.push_back(err);

    BoundReport b = p.is_infinite()
                        ? theorem2_rhs(op, omega, N, cap, q)
                        : theorem1_rhs(op, omega, N, p, cap, q);
    report.bound_values.push_back(b.error_bound().value_or(
        std::numeric_limits<double>::infinity()));
    report.log_corrected_ratio.push_back(err * N / std::log(std::max(N, 2.0)));
  }

  report.predicted_slope = -slope_of_modulus(omega);
  // First ladder point dropped from the fit (pre-asymptotic).
  std::vector<double> ns(report.n_ladder.begin() + 1, report.n_ladder.end());
  std::vector<double> es(report.errors.begin() + 1, report.errors.end());
  const RateFit fit = fit_rate(ns, es);
  report.fitted_slope = fit.slope;
  report.fit_r_squared = fit.r_squared;
  return report;
}

double fejer_convolution(const TestFunction& f, double r, double x,
                         const QuadratureConfig& q) {
  if (!(r > 0)) throw OutOfRange("dilation parameter r must be positive");
  // (F_r * f)(x) = int F(u) f(x - u/r) du; the u-window is the smaller of
  // f's support image and the Fejer tail cutoff.
  const double kTailCut = 4e4;  // int_{|u|>U} F <= (4/pi)/U ~ 3e-5 there
  double lo = -kTailCut, hi = kTailCut;
  if (f.numerically_compact()) {
    lo = std::max(lo, r * (x - f.support_radius));
    hi = std::min(hi, r * (x + f.support_radius));
    if (lo >= hi) return 0.0;
  }
  std::vector<double> cuts;
  for (double b : f.breakpoints) {
    const double u = r * (x - b);
    if (u > lo && u < hi) cuts.push_back(u);
  }
  // Pre-split at the kernel's oscillation scale so panels see smooth data.
  const double step = 2.0 * kPi;
  for (double u = std::ceil(lo / step) * step; u < hi; u += step)
    cuts.push_back(u);
  std::sort(cuts.begin(), cuts.end());

  auto F = [](double u) {
    const double s = sinc(0.5 * u);
    return s * s / (2.0 * kPi);
  };
  auto integrand = [&](double u) { return F(u) * f.eval(x - u / r); };
  QuadratureConfig qc = q;
  qc.max_subdivisions = std::max(q.max_subdivisions, 20000);
  return integrate(integrand, lo, hi, qc, cuts).value;
}

RateReport approximate_identity_study(const TestFunction& f,
                                      const LebesgueExponent& p,
                                      const GridSpec& r_ladder,
                                      const QuadratureConfig& q) {
  RateReport report;
  report.operator_name = "fejer";
  report.f_label = f.label;
  report.p = p;
  report.n_ladder = r_ladder.points;

  const GridSpec grid = study_grid(f);
  for (double r : r_ladder.points) {
    std::vector<double> diff(grid.size());
    parallel_for_index(grid.size(), [&](std::size_t i) {
      const double x = grid.points[i];
      diff[i] = fejer_convolution(f, r, x, q) - f.eval(x);
    });
    const double err = grid_norm(grid.points, diff, p);
    report.errors.push_back(err);
    report.log_corrected_ratio.push_back(err * r / std::log(std::max(r, 2.0)));
  }

  const ModulusFn omega = modulus_function(f, p, q);
  report.predicted_slope = -slope_of_modulus(omega);

  std::vector<double> ns(report.n_ladder.begin() + 1, report.n_ladder.end());
  std::vector<double> es(report.errors.begin() + 1, report.errors.end());
  const RateFit fit = fit_rate(ns, es);
  report.fitted_slope = fit.slope;
  report.fit_r_squared = fit.r_squared;

  // No explicit constant in the approximate-identity statement: anchor the
  // predicted-rate reference line at the first ladder point.
  for (double r : r_ladder.points)
    report.bound_values.push_back(
        report.errors.front() *
        std::pow(r / r_ladder.points.front(), report.predicted_slope));
  return report;
}

std::vector<DivergenceRow> bellman_divergence_demo(
    const GridSpec& S_ladder, const ModulusFn& modulus,
    const QuadratureConfig& q) {
  auto truncated_term = [&](const HausdorffOperatorSpec& op, double S) {
    const KernelSpec& k = op.kernel;
    auto inner = [&](double s) {
      const double t_lo = std::max(tail_set_lower_limit(op.scaling, s),
                                   k.support_lo);
      const double t_hi = std::min(S, k.support_hi);
      if (t_lo >= t_hi) return 0.0;
      return integrate([&](double t) { return std::fabs(k(t)); }, t_lo, t_hi,
                       q, k.breakpoints)
          .value;
    };
    auto outer = [&](double s) { return modulus(s) / s * inner(s); };
    return 2.0 * integrate(outer, 0.5, 1.0, q).value;
  };

  const auto bellman = operators::bellman().spec;
  const auto cesaro = operators::cesaro().spec;
  std::vector<DivergenceRow> rows;
  for (double S : S_ladder.points)
    rows.push_back({S, truncated_term(bellman, S), truncated_term(cesaro, S)});
  return rows;
}

RateReport recovery_study(const HausdorffOperatorSpec& op,
                          const TestFunction& f, const GridSpec& n_ladder,
                          const GridSpec& y_grid, const QuadratureConfig& q) {
  RateReport report;
  report.operator_name = op.name;
  report.f_label = f.label;
  report.p = LebesgueExponent::infinity();
  report.n_ladder = n_ladder.points;

  const ModulusFn omega =
      modulus_function(f, LebesgueExponent::infinity(), q);
  const double cap = 2.0 * lp_norm(f, LebesgueExponent::infinity(), q);

  for (double N : n_ladder.points) {
    ApproximantResult rec = function_recovery(op, f, N, y_grid, q);
    double err = 0.0;
    for (std::size_t i = 0; i < y_grid.size(); ++i)
      err = std::max(err,
                     std::fabs(rec.values[i] - f.eval(y_grid.points[i])));
    report.errors.push_back(err);
    BoundReport b = theorem2_rhs(op, omega, N, cap, q);
    report.bound_values.push_back(b.error_bound().value_or(
        std::numeric_limits<double>::infinity()));
    report.log_corrected_ratio.push_back(err * N / std::log(std::max(N, 2.0)));
  }

  report.predicted_slope = -slope_of_modulus(omega);
  std::vector<double> ns(report.n_ladder.begin() + 1, report.n_ladder.end());
  std::vector<double> es(report.errors.begin() + 1, report.errors.end());
  const RateFit fit = fit_rate(ns, es);
  report.fitted_slope = fit.slope;
  report.fit_r_squared = fit.r_squared;
  return report;
}

}  // namespace haus
