#include "haus/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace haus {

namespace {

constexpr double kPi = std::numbers::pi;

// Weighted kernel integral over {t >= t_lo} within the support:
// int |phi(t)| |a(t)|^w dt.  Throws DivergentIntegral on dyadic growth.
double kernel_tail_weight(const HausdorffOperatorSpec& op, double t_lo,
                          double weight_exp, const QuadratureConfig& q) {
  const KernelSpec& k = op.kernel;
  const double lo = std::max(t_lo, k.support_lo);
  auto integrand = [&](double t) {
    const double phi = std::fabs(k(t));
    if (phi == 0.0) return 0.0;
    const double w = weight_exp == 0.0
                         ? 1.0
                         : std::pow(std::fabs(op.scaling.eval(t)), weight_exp);
    return phi * w;
  };
  if (std::isinf(k.support_hi)) {
    const double b = std::max(2.0 * std::max(lo, 1e-6), lo + 1.0);
    auto head = integrate(integrand, lo, b, q, k.breakpoints);
    auto tail = integrate_to_infinity(integrand, b, q);
    return head.value + tail.value;
  }
  if (lo >= k.support_hi) return 0.0;
  if (lo == 0.0)
    return integrate_singular_lower(integrand, 0.0, k.support_hi, q).value;
  return integrate(integrand, lo, k.support_hi, q, k.breakpoints).value;
}

std::optional<double> guarded(const std::function<double()>& fn) {
  try {
    return fn();
  } catch (const DivergentIntegral&) {
    return std::nullopt;
  }
}

}  // namespace

double tail_set_lower_limit(const ScalingSpec& a, double s) {
  if (s == 0.0) throw ZeroArgument("tail set undefined at s = 0");
  const double u = 1.0 / std::fabs(s);
  double t;
  try {
    t = std::fabs(a.inv(u));
  } catch (const Error&) {
    throw OutOfRange("1/s is not attained by the scaling");
  }
  if (!std::isfinite(t)) throw OutOfRange("1/s is not attained by the scaling");
  // Cross-check through the forward map: |a(T)| must reproduce 1/|s|.
  const double back = std::fabs(a.eval(t));
  if (std::fabs(back - u) > 1e-8 * (1.0 + u))
    throw OutOfRange("scaling inverse inconsistent at 1/s");
  return t;
}

namespace {

BoundReport bound_rhs(const HausdorffOperatorSpec& op, const ModulusFn& omega,
                      double N, const LebesgueExponent& p, double cap,
                      const QuadratureConfig& q) {
  BoundReport report;
  report.N = N;
  report.p = p;
  report.modulus_cap = cap;
  report.normalizer = p.is_infinite() ? kPi : (p.value() == 1.0 ? 1.0 : 0.5);
  const double wexp = p.is_infinite() ? 0.0 : 1.0 / p.value();

  auto capped = [&](double d) { return std::min(omega(d), cap); };
  const KernelSpec& k = op.kernel;
  const ScalingSpec& a = op.scaling;

  // Term 1: 2 int |phi| |a|^wexp omega(1/(|a| N)) dt.
  report.term1 = guarded([&] {
    auto integrand = [&](double t) {
      const double phi = std::fabs(k(t));
      if (phi == 0.0) return 0.0;
      const double am = std::fabs(a.eval(t));
      const double w = wexp == 0.0 ? 1.0 : std::pow(am, wexp);
      return phi * w * capped(1.0 / (am * N));
    };
    if (std::isinf(k.support_hi)) {
      const double b = std::max(2.0 * std::max(k.support_lo, 1e-6),
                                k.support_lo + 1.0);
      auto head = integrate(integrand, k.support_lo, b, q, k.breakpoints);
      auto tail = integrate_to_infinity(integrand, b, q);
      return 2.0 * (head.value + tail.value);
    }
    if (k.support_lo == 0.0)
      return 2.0 *
             integrate_singular_lower(integrand, 0.0, k.support_hi, q).value;
    return 2.0 *
           integrate(integrand, k.support_lo, k.support_hi, q, k.breakpoints)
               .value;
  });

  // Term 2: int_R omega(|s|/N)/|s| W(s) ds with W(s) the kernel tail weight
  // over |t| >= T(s); even in s, so twice the positive half.
  report.term2 = guarded([&] {
    // Probe the inner integral once; if the kernel tail diverges for one s
    // it diverges for all (the domain only shrinks as s grows).
    (void)kernel_tail_weight(op, tail_set_lower_limit(a, 0.5), wexp, q);

    auto integrand = [&](double s) {
      const double w = kernel_tail_weight(op, tail_set_lower_limit(a, s),
                                          wexp, q);
      if (w == 0.0) return 0.0;
      return capped(s / N) / s * w;
    };
    // Beyond s_upper = 1/|a(hi)| the tail set clears a compact support.
    double s_upper = std::numeric_limits<double>::infinity();
    if (!std::isinf(k.support_hi))
      s_upper = 1.0 / std::fabs(a.eval(k.support_hi));

    const double s0 = std::min(s_upper, 1.0);
    double v = integrate_singular_lower(integrand, 0.0, s0, q).value;
    if (s_upper > s0) {
      if (std::isinf(s_upper)) {
        v += integrate_to_infinity(integrand, s0, q).value;
      } else {
        v += integrate(integrand, s0, s_upper, q).value;
      }
    }
    return 2.0 * v;
  });

  if (report.term1 && report.term2)
    report.total = *report.term1 + *report.term2;
  return report;
}

}  // namespace

BoundReport theorem1_rhs(const HausdorffOperatorSpec& op,
                         const ModulusFn& omega_p, double N,
                         const LebesgueExponent& p, double modulus_cap,
                         const QuadratureConfig& q) {
  if (p.is_infinite())
    throw ConfigError("theorem1_rhs covers finite p only");
  if (!(N > 0)) throw OutOfRange("N must be positive");
  return bound_rhs(op, omega_p, N, p, modulus_cap, q);
}

BoundReport theorem2_rhs(const HausdorffOperatorSpec& op,
                         const ModulusFn& omega, double N, double modulus_cap,
                         const QuadratureConfig& q) {
  if (!(N > 0)) throw OutOfRange("N must be positive");
  return bound_rhs(op, omega, N, LebesgueExponent::infinity(), modulus_cap, q);
}

namespace {

// Kink locations of t -> f(x/a(t) - s/N) union f(x/a(t)).
std::vector<double> lemma_t_cuts(const HausdorffOperatorSpec& op,
                                 const TestFunction& f, double x, double s,
                                 double N) {
  std::vector<double> cuts = op.kernel.breakpoints;
  if (x == 0.0) return cuts;
  for (double b : f.breakpoints) {
    for (double target : {b, b + s / N}) {
      if (target == 0.0) continue;
      const double u = x / target;
      if (u == 0.0 || !std::isfinite(u)) continue;
      const double t = op.scaling.inv(u);
      if (std::isfinite(t)) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

double lemma1_pointwise_rhs(const HausdorffOperatorSpec& op,
                            const TestFunction& f, double N, double x,
                            const QuadratureConfig& q) {
  if (!(N > 0)) throw OutOfRange("N must be positive");
  const KernelSpec& k = op.kernel;
  const ScalingSpec& a = op.scaling;
  QuadratureConfig qi = q;
  qi.abs_tol = q.abs_tol * 0.25;
  qi.max_subdivisions = 600;

  // Term 1: int |phi a| int_{|s| <= 1/|a|} |f(x/a - s/N) - f(x/a)| ds dt.
  auto inner1 = [&](double t) {
    const double am = std::fabs(a.eval(t));
    const double c = x / a.eval(t);
    const double fc = f.eval(c);
    std::vector<double> cuts;
    for (double b : f.breakpoints) cuts.push_back(N * (c - b));
    std::sort(cuts.begin(), cuts.end());
    auto d = [&](double s) { return std::fabs(f.eval(c - s / N) - fc); };
    return integrate(d, -1.0 / am, 1.0 / am, qi, cuts).value;
  };
  auto outer1 = [&](double t) {
    const double phi = std::fabs(k(t));
    if (phi == 0.0) return 0.0;
    return phi * std::fabs(a.eval(t)) * inner1(t);
  };
  double term1;
  if (std::isinf(k.support_hi)) {
    const double b = std::max(2.0 * std::max(k.support_lo, 1e-6),
                              k.support_lo + 1.0);
    term1 = integrate(outer1, k.support_lo, b, q, k.breakpoints).value +
            integrate_to_infinity(outer1, b, q).value;
  } else if (k.support_lo == 0.0) {
    term1 = integrate_singular_lower(outer1, 0.0, k.support_hi, q).value;
  } else {
    term1 = integrate(outer1, k.support_lo, k.support_hi, q, k.breakpoints)
                .value;
  }

  // Term 2: int 1/|s| int_{|t| >= T(s)} |phi| |f(x/a - s/N) - f(x/a)| dt ds.
  auto inner2 = [&](double s) {
    const double t_lo = std::max(tail_set_lower_limit(a, s), k.support_lo);
    auto integrand = [&](double t) {
      const double phi = std::fabs(k(t));
      if (phi == 0.0) return 0.0;
      const double c = x / a.eval(t);
      return phi * std::fabs(f.eval(c - s / N) - f.eval(c));
    };
    if (std::isinf(k.support_hi)) {
      const double b = std::max(2.0 * std::max(t_lo, 1e-6), t_lo + 1.0);
      return integrate(integrand, t_lo, b, qi).value +
             integrate_to_infinity(integrand, b, qi).value;
    }
    if (t_lo >= k.support_hi) return 0.0;
    return integrate(integrand, t_lo, k.support_hi, qi,
                     lemma_t_cuts(op, f, x, s, N))
        .value;
  };
  double s_upper = std::numeric_limits<double>::infinity();
  if (!std::isinf(k.support_hi))
    s_upper = 1.0 / std::fabs(a.eval(k.support_hi));

  double term2 = 0.0;
  for (double sign : {1.0, -1.0}) {
    auto integrand = [&](double s) { return inner2(sign * s) / s; };
    const double s0 = std::min(s_upper, 1.0);
    term2 += integrate_singular_lower(integrand, 0.0, s0, q).value;
    if (s_upper > s0) {
      if (std::isinf(s_upper))
        term2 += integrate_to_infinity(integrand, s0, q).value;
      else
        term2 += integrate(integrand, s0, s_upper, q).value;
    }
  }
  return (term1 + term2) / kPi;
}

double lemma2_pointwise_rhs(const HausdorffOperatorSpec& op,
                            const TestFunction& f, double N, double x,
                            const QuadratureConfig& q) {
  if (!(N > 0)) throw OutOfRange("N must be positive");
  const KernelSpec& k = op.kernel;
  const ScalingSpec& a = op.scaling;
  QuadratureConfig qi = q;
  qi.abs_tol = q.abs_tol * 0.25;
  qi.max_subdivisions = 600;

  // Term 1: int |phi| int_{|s| <= |a(t)|} |f(a(t)x - s/N) - f(a(t)x)| ds dt.
  auto inner1 = [&](double t) {
    const double at = a.eval(t);
    const double c = at * x;
    const double fc = f.eval(c);
    std::vector<double> cuts;
    for (double b : f.breakpoints) cuts.push_back(N * (c - b));
    std::sort(cuts.begin(), cuts.end());
    auto d = [&](double s) { return std::fabs(f.eval(c - s / N) - fc); };
    return integrate(d, -std::fabs(at), std::fabs(at), qi, cuts).value;
  };
  auto outer1 = [&](double t) {
    const double phi = std::fabs(k(t));
    if (phi == 0.0) return 0.0;
    return phi * inner1(t);
  };
  double term1;
  if (std::isinf(k.support_hi)) {
    const double b = std::max(2.0 * std::max(k.support_lo, 1e-6),
                              k.support_lo + 1.0);
    term1 = integrate(outer1, k.support_lo, b, q, k.breakpoints).value +
            integrate_to_infinity(outer1, b, q).value;
  } else if (k.support_lo == 0.0) {
    term1 = integrate_singular_lower(outer1, 0.0, k.support_hi, q).value;
  } else {
    term1 = integrate(outer1, k.support_lo, k.support_hi, q, k.breakpoints)
                .value;
  }

  // Term 2: the tail wedge |s| <= |a(t)|, i.e. |t| <= |a^{-1}(s)|, with
  // weight |phi a| / |s|.  (This is the per-t set on which the 1/|s| bound
  // of the oscillatory kernel applies; the complementary orientation pairs
  // 1/|s| with a non-decaying integrand and diverges for every f with
  // H f != 0.)
  auto inner2 = [&](double s) {
    double t_hi;
    try {
      t_hi = std::fabs(a.inv(std::fabs(s)));
    } catch (const Error&) {
      return 0.0;
    }
    t_hi = std::min(t_hi, k.support_hi);
    if (t_hi <= k.support_lo) return 0.0;
    auto integrand = [&](double t) {
      const double phi = std::fabs(k(t));
      if (phi == 0.0) return 0.0;
      const double at = a.eval(t);
      const double c = at * x;
      return phi * std::fabs(at) * std::fabs(f.eval(c - s / N) - f.eval(c));
    };
    if (k.support_lo == 0.0 && !f.numerically_compact())
      return integrate_singular_lower(integrand, 0.0, t_hi, qi).value;
    return integrate(integrand, k.support_lo, t_hi, qi).value;
  };
  // The wedge empties once |s| exceeds sup |a| over the support.
  double s_upper = std::numeric_limits<double>::infinity();
  if (k.support_lo > 0.0) s_upper = std::fabs(a.eval(k.support_lo));

  double term2 = 0.0;
  for (double sign : {1.0, -1.0}) {
    auto integrand = [&](double s) { return inner2(sign * s) / s; };
    const double s0 = std::min(s_upper, 1.0);
    term2 += integrate_singular_lower(integrand, 0.0, s0, q).value;
    if (s_upper > s0) {
      if (std::isinf(s_upper))
        term2 += integrate_to_infinity(integrand, s0, q).value;
      else
        term2 += integrate(integrand, s0, s_upper, q).value;
    }
  }
  return (term1 + term2) / kPi;
}

}  // namespace haus
