#include "haus/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "haus/special.hpp"

namespace haus {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Euler transform of a (near-)alternating series.
// ---------------------------------------------------------------------------

struct EulerSum {
  double value = 0.0;
  double error = 0.0;
};

EulerSum euler_sum(const std::vector<double>& terms) {
  if (terms.empty()) return {0.0, 0.0};
  std::vector<double> row(terms.size());
  double s = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    s += terms[i];
    row[i] = s;
  }
  double prev = row.back();
  double last = prev;
  while (row.size() > 1) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
    prev = last;
    last = row.back();
  }
  return {last, std::fabs(last - prev)};
}

// ---------------------------------------------------------------------------
// Half-period lobes + Euler acceleration (one side of the axis).
// ---------------------------------------------------------------------------

OscillatoryResult sinc_side(const RealFn& g, double lambda,
                            const QuadratureConfig& q,
                            std::span<const double> breakpoints,
                            double support_radius) {
  // lambda > 0 here; integral over s in (0, inf).
  const double period = kPi / lambda;
  QuadratureConfig lobe_cfg = q;
  lobe_cfg.abs_tol = q.abs_tol / 16.0;
  lobe_cfg.max_subdivisions = 200;

  auto integrand = [&](double s) { return g(s) * sinc_kernel(lambda, s); };
  std::vector<double> cuts(breakpoints.begin(), breakpoints.end());

  OscillatoryResult out;
  auto head = integrate(integrand, 0.0, period, lobe_cfg, cuts);
  out.value = head.value;
  out.error = head.error;

  const double s_stop = std::min(support_radius, q.oscillatory_truncation);
  std::vector<double> lobes;
  int k = 1;
  for (; k <= q.acceleration_terms; ++k) {
    const double a = k * period;
    if (a >= s_stop) {
      // Support (or the hard cutoff) exhausted: the series terminates.
      out.value += euler_sum(lobes).value;
      out.lobes_used = k - 1;
      // Anything beyond the hard cutoff inside the support is unaccounted.
      if (s_stop < support_radius)
        out.tail_error += 2.0 / (lambda * s_stop);
      out.converged = true;
      return out;
    }
    const double b = std::min(a + period, s_stop);
    auto lobe = integrate(integrand, a, b, lobe_cfg, cuts);
    out.error += lobe.error;
    lobes.push_back(lobe.value);
    if (lobes.size() >= 6) {
      const auto acc = euler_sum(lobes);
      const double tol = std::max(q.abs_tol,
                                  q.rel_tol * std::fabs(out.value + acc.value));
      if (acc.error < 0.25 * tol) {
        out.value += acc.value;
        out.tail_error += acc.error;
        out.lobes_used = k;
        return out;
      }
    }
  }
  out.converged = false;
  const auto acc = euler_sum(lobes);
  out.value += acc.value;
  out.tail_error += acc.error;
  out.lobes_used = k - 1;
  return out;
}

}  // namespace

OscillatoryResult sinc_integral(const RealFn& g, double lambda,
                                const QuadratureConfig& q,
                                std::span<const double> breakpoints,
                                double support_radius) {
  if (lambda == 0.0) throw ZeroArgument("sinc_integral requires lambda != 0");
  const double sign = lambda > 0 ? 1.0 : -1.0;
  const double lam = std::fabs(lambda);

  // Negative half-axis folds onto the positive one with g mirrored
  // (sin(lam s)/s is even in s).
  std::vector<double> pos_cuts, neg_cuts;
  for (double b : breakpoints) {
    if (b > 0) pos_cuts.push_back(b);
    if (b < 0) neg_cuts.push_back(-b);
  }
  std::sort(pos_cuts.begin(), pos_cuts.end());
  std::sort(neg_cuts.begin(), neg_cuts.end());

  auto plus = sinc_side(g, lam, q, pos_cuts, support_radius);
  auto mirrored = [&g](double s) { return g(-s); };
  auto minus = sinc_side(mirrored, lam, q, neg_cuts, support_radius);

  OscillatoryResult out;
  out.value = sign * (plus.value + minus.value);
  out.error = plus.error + minus.error;
  out.tail_error = plus.tail_error + minus.tail_error;
  out.lobes_used = plus.lobes_used + minus.lobes_used;
  out.converged = plus.converged && minus.converged;
  if (!out.converged)
    throw OscillatoryTailNotConverged(
        "lobe series did not reach tolerance within acceleration_terms");
  return out;
}

// ---------------------------------------------------------------------------
// Panelized Filon engine with closed-form sinc moments.
// ---------------------------------------------------------------------------

namespace {

// Degree-4 fit through the 5 Chebyshev-extrema nodes on [-1, 1].
constexpr double kXi[5] = {1.0, 0.70710678118654752, 0.0,
                           -0.70710678118654752, -1.0};
constexpr double kTestXi[4] = {0.92387953251128676, 0.38268343236508977,
                               -0.38268343236508977, -0.92387953251128676};

void fit5(const double gv[5], double c[5]) {
  constexpr double r2 = 1.4142135623730951;
  c[0] = gv[2];
  c[1] = -0.5 * gv[0] + r2 * gv[1] - r2 * gv[3] + 0.5 * gv[4];
  c[2] = -0.5 * gv[0] + 2.0 * gv[1] - 3.0 * gv[2] + 2.0 * gv[3] - 0.5 * gv[4];
  c[3] = gv[0] - r2 * gv[1] + r2 * gv[3] - gv[4];
  c[4] = gv[0] - 2.0 * gv[1] + 2.0 * gv[2] - 2.0 * gv[3] + gv[4];
}

double horner5(const double c[5], double xi) {
  return (((c[4] * xi + c[3]) * xi + c[2]) * xi + c[1]) * xi + c[0];
}

// int_a^b min(|Omega|, 1/|s|) ds, an upper weight for |sin(Omega s)/s|.
double kernel_weight(double omega, double a, double b) {
  omega = std::fabs(omega);
  auto piece = [&](double lo, double hi) {  // 0 <= lo <= hi
    if (hi <= lo) return 0.0;
    const double cut = std::min(hi, std::max(lo, 1.0 / omega));
    double w = omega * (cut - lo);
    if (hi > cut) w += std::log(hi / cut);
    return w;
  };
  double w = 0.0;
  if (a < 0) w += piece(std::max(0.0, -b), -a);
  if (b > 0) w += piece(std::max(0.0, a), b);
  return w;
}

// J_m = int_a^b s^m sin(w s) ds and K_m = int_a^b s^m cos(w s) ds, m <= 3,
// by the integration-by-parts recursion.  Safe for |w|(b-a) not small.
void sin_cos_power_moments(double w, double a, double b, double J[4],
                           double K[4]) {
  const double sa = std::sin(w * a), ca = std::cos(w * a);
  const double sb = std::sin(w * b), cb = std::cos(w * b);
  double pa = 1.0, pb = 1.0;  // a^m, b^m
  J[0] = (ca - cb) / w;
  K[0] = (sb - sa) / w;
  for (int m = 1; m < 4; ++m) {
    pa *= a;
    pb *= b;
    J[m] = (pa * ca - pb * cb) / w + (m / w) * K[m - 1];
    K[m] = (pb * sb - pa * sa) / w - (m / w) * J[m - 1];
  }
}

struct PanelValue {
  double value = 0.0;
  double error = 0.0;
};

// Direct Gauss-Kronrod for panels spanning at most ~one oscillation.
PanelValue panel_gk(const std::function<double(double)>& g, double omega,
                    double a, double b) {
  auto est = gk15(
      [&](double s) { return g(s) * sinc_kernel(omega, s); }, a, b);
  return {est.value, est.error};
}

// Node abscissa for index i on [a, b]; the +-1 endpoints are nudged inward so
// that a jump sitting exactly on a panel edge is sampled from the interior.
inline double node_at(double c, double H, int i) {
  double xi = kXi[i];
  if (xi == 1.0) xi = 1.0 - 1e-9;
  if (xi == -1.0) xi = -1.0 + 1e-9;
  return c + H * xi;
}

// Near-zero panel: fit g itself, integrate against sin(w s)/s with global
// monomial moments (M0 is a sine-integral difference).
PanelValue panel_near_zero(const std::function<double(double)>& g,
                           double omega, double a, double b) {
  const double c = 0.5 * (a + b), H = 0.5 * (b - a);
  double gv[5], d[5];
  for (int i = 0; i < 5; ++i) gv[i] = g(node_at(c, H, i));
  fit5(gv, d);

  double ierr = 0.0;
  for (double xi : kTestXi)
    ierr = std::max(ierr, std::fabs(g(c + H * xi) - horner5(d, xi)));

  // Convert the xi-polynomial to global monomials e_k s^k.
  double e[5] = {0, 0, 0, 0, 0};
  // ((s - c)/H)^j expanded by binomials.
  const double binom[5][5] = {{1, 0, 0, 0, 0},
                              {1, 1, 0, 0, 0},
                              {1, 2, 1, 0, 0},
                              {1, 3, 3, 1, 0},
                              {1, 4, 6, 4, 1}};
  for (int j = 0; j < 5; ++j) {
    const double scale = d[j] / std::pow(H, j);
    double cpow = 1.0;  // (-c)^{j-k}, built from k = j downward
    for (int k = j; k >= 0; --k) {
      e[k] += scale * binom[j][k] * cpow;
      cpow *= -c;
    }
  }

  double J[4], K[4];
  sin_cos_power_moments(omega, a, b, J, K);
  double value = e[0] * (sine_integral(omega * b) - sine_integral(omega * a));
  for (int k = 1; k < 5; ++k) value += e[k] * J[k - 1];
  return {value, ierr * kernel_weight(omega, a, b)};
}

// Panel away from zero: fit h = g/s, integrate h against sin(w s) with local
// trigonometric moments.
PanelValue panel_local(const std::function<double(double)>& g, double omega,
                       double a, double b) {
  const double c = 0.5 * (a + b), H = 0.5 * (b - a);
  double hv[5], d[5];
  for (int i = 0; i < 5; ++i) {
    const double s = node_at(c, H, i);
    hv[i] = g(s) / s;
  }
  fit5(hv, d);

  double ierr = 0.0;
  for (double xi : kTestXi) {
    const double s = c + H * xi;
    ierr = std::max(ierr, std::fabs(g(s) / s - horner5(d, xi)));
  }

  // alpha_j = int_{-1}^{1} xi^j cos(theta xi) dxi (even j), beta_j likewise
  // with sin (odd j); theta = omega * H.
  const double theta = omega * H;
  double cm[5], sm[5];  // int_0^1 xi^m {cos,sin}(theta xi) dxi
  cm[0] = std::sin(theta) / theta;
  sm[0] = (1.0 - std::cos(theta)) / theta;
  for (int m = 1; m < 5; ++m) {
    cm[m] = std::sin(theta) / theta - (m / theta) * sm[m - 1];
    sm[m] = -std::cos(theta) / theta + (m / theta) * cm[m - 1];
  }
  const double sc = std::sin(omega * c), cc = std::cos(omega * c);
  double value = 0.0;
  for (int j = 0; j < 5; ++j) {
    const double alpha = (j % 2 == 0) ? 2.0 * cm[j] : 0.0;
    const double beta = (j % 2 == 1) ? 2.0 * sm[j] : 0.0;
    value += d[j] * H * (sc * alpha + cc * beta);
  }
  return {value, ierr * (b - a)};
}

PanelValue eval_panel(const std::function<double(double)>& g, double omega,
                      double a, double b) {
  const double theta = std::fabs(omega) * (b - a);
  if (theta <= 6.0 || b - a < 1e-13) return panel_gk(g, omega, a, b);
  const double dist = std::min(std::fabs(a), std::fabs(b));
  const bool near_zero = (a <= 0.0 && b >= 0.0) || dist < (b - a);
  return near_zero ? panel_near_zero(g, omega, a, b)
                   : panel_local(g, omega, a, b);
}

}  // namespace

OscillatoryResult filon_sinc(const SincProfile& g, double lambda,
                             const QuadratureConfig& q) {
  if (lambda == 0.0) throw ZeroArgument("filon_sinc requires lambda != 0");
  if (!(g.core_lo < 0.0 && g.core_hi > 0.0))
    throw OutOfRange("sinc profile core must contain 0");

  OscillatoryResult out;

  // Exact constant tails via the sine integral.
  const double half = 0.5 * kPi * (lambda > 0 ? 1.0 : -1.0);
  if (g.const_above != 0.0)
    out.value += g.const_above * (half - sine_integral(lambda * g.core_hi));
  if (g.const_below != 0.0)
    out.value += g.const_below * (half + sine_integral(lambda * g.core_lo));

  // Envelope bound for whatever the constants miss beyond the core.
  if (g.envelope) {
    QuadratureConfig qe;
    qe.abs_tol = 0.1 * q.abs_tol;
    auto weighted = [&](double s) { return g.envelope(s) / s; };
    out.tail_error +=
        integrate_to_infinity(weighted, g.core_hi, qe).value;
    out.tail_error +=
        integrate_to_infinity(weighted, -g.core_lo, qe).value;
  }

  // Core: split at breakpoints, then adaptive bisection per panel.
  std::vector<double> cuts{g.core_lo, 0.0, g.core_hi};
  for (double b : g.breakpoints)
    if (b > g.core_lo && b < g.core_hi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double total_len = g.core_hi - g.core_lo;
  struct Seg { double a, b; int depth; };
  std::vector<Seg> stack;
  for (std::size_t i = cuts.size() - 1; i > 0; --i)
    stack.push_back({cuts[i - 1], cuts[i], 0});

  int panels = 0;
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    PanelValue pv = eval_panel(g.eval, lambda, s.a, s.b);
    const double share =
        std::max(q.abs_tol * (s.b - s.a) / total_len, 1e-16 * std::fabs(pv.value));
    if (pv.error <= share || s.depth >= 48 || ++panels > q.max_subdivisions) {
      out.value += pv.value;
      out.error += pv.error;
      continue;
    }
    const double mid = 0.5 * (s.a + s.b);
    stack.push_back({mid, s.b, s.depth + 1});
    stack.push_back({s.a, mid, s.depth + 1});
  }
  out.converged = out.error + out.tail_error <=
                  8.0 * std::max(q.abs_tol, q.rel_tol * std::fabs(out.value));
  return out;
}

}  // namespace haus
