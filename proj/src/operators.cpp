#include "haus/operators.hpp"

#include <algorithm>
#include <cmath>

namespace haus {

namespace {

// Positive t with |a(t)| = u, for u > 0.  Uses the declared inverse; the
// catalog scalings map (0,inf) to (0,inf), and oddness covers the rest.
double abs_inverse(const ScalingSpec& a, double u) {
  return std::fabs(a.inv(u));
}

// t-locations at which f(a(t) x) has a kink, i.e. a(t) x = b.
std::vector<double> forward_cuts(const HausdorffOperatorSpec& op,
                                 const TestFunction& f, double x) {
  std::vector<double> cuts;
  if (x == 0.0) return cuts;
  for (double b : f.breakpoints) {
    const double u = b / x;
    if (u == 0.0 || !std::isfinite(u)) continue;
    const double t = op.scaling.inv(u);
    if (std::isfinite(t)) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// t-locations at which f(x / a(t)) has a kink, i.e. a(t) = x / b.
std::vector<double> adjoint_cuts(const HausdorffOperatorSpec& op,
                                 const TestFunction& f, double x) {
  std::vector<double> cuts;
  if (x == 0.0) return cuts;
  for (double b : f.breakpoints) {
    if (b == 0.0) continue;
    const double u = x / b;
    if (u == 0.0 || !std::isfinite(u)) continue;
    const double t = op.scaling.inv(u);
    if (std::isfinite(t)) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<double> merge_kernel_cuts(const KernelSpec& k,
                                      std::vector<double> cuts) {
  cuts.insert(cuts.end(), k.breakpoints.begin(), k.breakpoints.end());
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

HausdorffOperatorSpec classical_operator(const KernelSpec& phi) {
  return {phi.name, phi, scalings::reciprocal()};
}

double hausdorff_apply(const HausdorffOperatorSpec& op, const TestFunction& f,
                       double x, const QuadratureConfig& q) {
  const KernelSpec& k = op.kernel;
  if (k.unbounded_support() && k.decay == KernelDecay::None)
    throw TailNotIntegrable("kernel has unbounded support with no decay class");

  const auto& a = op.scaling;
  auto integrand = [&](double t) {
    const double phi = k(t);
    if (phi == 0.0) return 0.0;
    const double at = a.eval(t);
    return phi * std::fabs(at) * f.eval(at * x);
  };
  const auto cuts = merge_kernel_cuts(k, forward_cuts(op, f, x));

  if (std::isinf(k.support_hi)) {
    double b = std::max(k.support_lo, 1e-6);
    for (double c : cuts) b = std::max(b, c);
    b = std::max(2.0 * b, k.support_lo + 1.0);
    auto head = integrate(integrand, k.support_lo, b, q, cuts);
    auto tail = integrate_to_infinity(integrand, b, q);
    return head.value + tail.value;
  }

  // Compact kernel support.  |a| blows up toward t = 0; when f vanishes
  // outside its support and x != 0 the integrand is exactly zero there, so
  // plain adaptive panels suffice.  Otherwise probe the endpoint dyadically.
  const bool singular_origin = (k.support_lo == 0.0);
  if (singular_origin && !(f.numerically_compact() && x != 0.0)) {
    auto est = integrate_singular_lower(integrand, 0.0, k.support_hi, q);
    return est.value;
  }
  return integrate(integrand, k.support_lo, k.support_hi, q, cuts).value;
}

double adjoint_apply(const HausdorffOperatorSpec& op, const TestFunction& f,
                     double x, const QuadratureConfig& q) {
  const KernelSpec& k = op.kernel;
  const auto& a = op.scaling;
  auto integrand = [&](double t) {
    const double phi = k(t);
    if (phi == 0.0) return 0.0;
    return phi * f.eval(x / a.eval(t));
  };
  const auto cuts = merge_kernel_cuts(k, adjoint_cuts(op, f, x));

  if (std::isinf(k.support_hi)) {
    if (f.numerically_compact() && x != 0.0) {
      // f(x/a(t)) vanishes once |a(t)| < |x| / R.
      const double t_max = abs_inverse(a, std::fabs(x) / f.support_radius);
      if (t_max <= k.support_lo) return 0.0;
      return integrate(integrand, k.support_lo, t_max, q, cuts).value;
    }
    double b = std::max(k.support_lo, 1e-6);
    for (double c : cuts) b = std::max(b, c);
    b = std::max(2.0 * b, k.support_lo + 1.0);
    auto head = integrate(integrand, k.support_lo, b, q, cuts);
    auto tail = integrate_to_infinity(integrand, b, q);
    return head.value + tail.value;
  }
  return integrate(integrand, k.support_lo, k.support_hi, q, cuts).value;
}

PointValue cesaro_closed_form(const TestFunction& f, double x,
                              const QuadratureConfig& q) {
  if (x == 0.0) return {f.eval(0.0), true};
  const double lo = std::min(0.0, x), hi = std::max(0.0, x);
  auto est = integrate([&](double t) { return f.eval(t); }, lo, hi, q,
                       f.breakpoints);
  const double signed_integral = (x > 0) ? est.value : -est.value;
  return {signed_integral / x, false};
}

double bellman_closed_form(const TestFunction& f, double x,
                           const QuadratureConfig& q) {
  if (!(x > 0.0)) throw ZeroArgument("bellman closed form requires x > 0");
  if (!f.numerically_compact())
    throw TailNotIntegrable("f(t)/t needs a certified tail to integrate");
  const double hi = f.support_radius;
  if (x >= hi) return 0.0;
  auto est = integrate([&](double t) { return f.eval(t) / t; }, x, hi, q,
                       f.breakpoints);
  return est.value;
}

RiemannLiouvilleValue riemann_liouville_closed_form(const TestFunction& f,
                                                    double alpha, double x,
                                                    const QuadratureConfig& q) {
  if (!(alpha > 0.0)) throw InvalidAlpha("alpha must be positive");
  RiemannLiouvilleValue out;
  if (x == 0.0) {
    out.value = f.eval(0.0) / (alpha + 1.0);
    out.is_limit = true;
    return out;
  }
  auto integrand = [&](double t) {
    return f.eval(t * x) * std::pow(1.0 - t, alpha);
  };
  std::vector<double> cuts;
  for (double b : f.breakpoints) {
    const double t = b / x;
    if (t > 0.0 && t < 1.0) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  out.value = integrate(integrand, 0.0, 1.0, q, cuts).value;

  if (x > 0.0) {
    auto classical = [&](double u) {
      return f.eval(u) * std::pow(x - u, alpha);
    };
    auto est = integrate(classical, 0.0, x, q, f.breakpoints);
    out.via_classical = std::tgamma(alpha) *
                        std::pow(x, -alpha - 1.0) *
                        (est.value / std::tgamma(alpha));
  }
  return out;
}

double duality_gap(const HausdorffOperatorSpec& op, const TestFunction& f,
                   const TestFunction& g, const QuadratureConfig& q) {
  QuadratureConfig inner = q;
  inner.abs_tol = q.abs_tol * 0.1;
  inner.rel_tol = q.rel_tol * 0.1;

  // H f can carry an integrable log blow-up at x = 0 (dilation pivot), so
  // the pairing integrals are split there: panel interiors never sample it.
  auto with_zero = [](std::vector<double> cuts) {
    cuts.push_back(0.0);
    std::sort(cuts.begin(), cuts.end());
    return cuts;
  };

  const double Rg = g.support_radius;
  auto lhs_integrand = [&](double x) {
    const double gx = g.eval(x);
    if (gx == 0.0) return 0.0;
    return hausdorff_apply(op, f, x, inner) * gx;
  };
  auto lhs = integrate(lhs_integrand, -Rg, Rg, q, with_zero(g.breakpoints));

  const double Rf = f.support_radius;
  auto rhs_integrand = [&](double x) {
    const double fx = f.eval(x);
    if (fx == 0.0) return 0.0;
    return fx * adjoint_apply(op, g, x, inner);
  };
  auto rhs = integrate(rhs_integrand, -Rf, Rf, q, with_zero(f.breakpoints));

  return std::fabs(lhs.value - rhs.value);
}

namespace operators {

OperatorCatalogEntry cesaro() {
  OperatorCatalogEntry e;
  e.spec = classical_operator(kernels::unit_box());
  e.closed_form_adjoint = [](const TestFunction& f, double x,
                             const QuadratureConfig& q) {
    return cesaro_closed_form(f, x, q).value;
  };
  return e;
}

OperatorCatalogEntry bellman() {
  OperatorCatalogEntry e;
  e.spec = classical_operator(kernels::bellman());
  e.closed_form_adjoint = [](const TestFunction& f, double x,
                             const QuadratureConfig& q) {
    return bellman_closed_form(f, x, q);
  };
  return e;
}

OperatorCatalogEntry riemann_liouville(double alpha) {
  OperatorCatalogEntry e;
  e.spec = classical_operator(kernels::riemann_liouville(alpha));
  e.closed_form_adjoint = [alpha](const TestFunction& f, double x,
                                  const QuadratureConfig& q) {
    return riemann_liouville_closed_form(f, alpha, x, q).value;
  };
  return e;
}

OperatorCatalogEntry by_name(const std::string& name, double alpha) {
  if (name == "cesaro") return cesaro();
  if (name == "bellman") return bellman();
  if (name == "riemann-liouville" || name == "rl")
    return riemann_liouville(alpha);
  throw UnknownClass("unknown operator: " + name);
}

}  // namespace operators
}  // namespace haus
