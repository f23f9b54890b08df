#include "haus/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "haus/parallel.hpp"

namespace haus {

namespace {

constexpr double kPi = std::numbers::pi;

// Profile of sigma -> f(c - sigma) for the panel engine.  The core covers
// the support (or an envelope-certified window) and always contains 0.
SincProfile shifted_profile(const TestFunction& f, double c,
                            const QuadratureConfig& q, double* tail_budget) {
  SincProfile prof;
  auto base = f.eval;
  prof.eval = [base, c](double sigma) { return base(c - sigma); };
  for (double b : f.breakpoints) prof.breakpoints.push_back(c - b);
  std::sort(prof.breakpoints.begin(), prof.breakpoints.end());

  const double R = f.support_radius;
  if (f.numerically_compact()) {
    prof.core_lo = std::min(c - R, -1.0);
    prof.core_hi = std::max(c + R, 1.0);
    return prof;
  }
  if (!f.tail_envelope) {
    // Constant-type functions: the far field is the constant itself.
    const double above = base(c - 2.0 * R);
    const double below = base(c + 2.0 * R);
    if (std::fabs(base(c - 4.0 * R) - above) > 1e-12 * (1.0 + std::fabs(above)) ||
        std::fabs(base(c + 4.0 * R) - below) > 1e-12 * (1.0 + std::fabs(below)))
      throw TailNotIntegrable(
          "non-compact function needs a tail envelope or constant far field");
    prof.core_lo = std::min(c - 1.0, -1.0);
    prof.core_hi = std::max(c + 1.0, 1.0);
    prof.const_below = below;
    prof.const_above = above;
    return prof;
  }

  // Envelope-certified window: grow until the weighted tail is negligible
  // or the hard oscillatory cutoff is reached.
  auto fenv = f.tail_envelope;
  const double ac = std::fabs(c);
  auto env_g = [fenv, ac](double s) { return fenv(std::max(0.0, s - ac)); };
  QuadratureConfig qe;
  qe.abs_tol = 1e-3 * q.abs_tol;
  const double target = 0.25 * q.abs_tol;
  double W = std::max(2.0 * (ac + 1.0), 8.0);
  double bound = 0.0;
  for (;;) {
    bound = integrate_to_infinity([&](double s) { return env_g(s) / s; }, W, qe)
                .value;
    if (bound <= target || W >= q.oscillatory_truncation) break;
    W *= 2.0;
  }
  if (tail_budget) *tail_budget += 2.0 * bound;
  prof.core_lo = -W;
  prof.core_hi = W;
  prof.envelope = env_g;
  return prof;
}

std::vector<double> substituted_outer_cuts(const HausdorffOperatorSpec& op,
                                           const TestFunction& f, double x) {
  std::vector<double> cuts = op.kernel.breakpoints;
  if (x != 0.0) {
    for (double b : f.breakpoints) {
      if (b == 0.0) continue;
      const double u = x / b;
      if (u == 0.0 || !std::isfinite(u)) continue;
      const double t = op.scaling.inv(u);
      if (std::isfinite(t)) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

struct OuterAccumulator {
  double max_err = 0.0;
  double max_tail = 0.0;
};

// Shared outer kernel-side integration: head over the compact part, dyadic
// blocks toward an infinite support end, dyadic probing toward a singular
// origin when the weight requires it.
double outer_kernel_integral(const KernelSpec& k, const RealFn& integrand,
                             const std::vector<double>& cuts,
                             bool singular_origin_possible,
                             const QuadratureConfig& q) {
  QuadratureConfig qo = q;
  qo.abs_tol = 2.0 * q.abs_tol;
  qo.max_subdivisions = 500;

  if (std::isinf(k.support_hi)) {
    double b = std::max(k.support_lo, 1e-6);
    for (double c : cuts) b = std::max(b, c);
    b = std::max(2.0 * b, k.support_lo + 1.0);
    auto head = integrate(integrand, k.support_lo, b, qo, cuts);
    auto tail = integrate_to_infinity(integrand, b, qo);
    return head.value + tail.value;
  }
  if (k.support_lo == 0.0 && singular_origin_possible) {
    auto est = integrate_singular_lower(integrand, 0.0, k.support_hi, qo);
    return est.value;
  }
  return integrate(integrand, k.support_lo, k.support_hi, qo, cuts).value;
}

}  // namespace

std::complex<double> fourier_transform(const TestFunction& f, double y,
                                       const QuadratureConfig& q) {
  if (f.analytic_ft) return f.analytic_ft(y);
  if (!f.in_lp(LebesgueExponent::finite(1)))
    throw TailNotIntegrable("Fourier transform needs f in L^1");
  if (f.tail_bound > 1e-13)
    throw TailNotIntegrable("tail bound too large for a certified transform");
  const double R = f.support_radius;
  auto integrand = [&](double s) {
    return f.eval(s) * std::exp(std::complex<double>(0.0, -s * y));
  };
  return integrate(integrand, -R, R, q, f.breakpoints).value;
}

double truncated_approximant_at(const HausdorffOperatorSpec& op,
                                const TestFunction& f, double N, double x,
                                const QuadratureConfig& q,
                                PointDiagnostics* diag) {
  if (!(N > 0)) throw OutOfRange("truncation parameter N must be positive");
  const KernelSpec& k = op.kernel;
  const ScalingSpec& a = op.scaling;

  OuterAccumulator acc;
  QuadratureConfig qi = q;
  qi.max_subdivisions = 800;

  auto integrand = [&](double t) {
    const double phi = k(t);
    if (phi == 0.0) return 0.0;
    const double at = a.eval(t);
    const double c = x / at;
    double tail = 0.0;
    SincProfile prof = shifted_profile(f, c, qi, &tail);
    auto res = filon_sinc(prof, at * N, qi);
    acc.max_err = std::max(acc.max_err, res.error);
    acc.max_tail = std::max(acc.max_tail, res.tail_error + tail);
    return phi * res.value;
  };

  const auto cuts = substituted_outer_cuts(op, f, x);
  // The substituted integrand phi(t) S(t) stays bounded toward t -> 0 (the
  // |a| weight cancelled), so no singular-origin probing is needed.
  const double v = outer_kernel_integral(k, integrand, cuts, false, q);
  if (diag) {
    diag->quad_error = acc.max_err;
    diag->tail_error = acc.max_tail;
  }
  return v / kPi;
}

ApproximantResult truncated_approximant(const HausdorffOperatorSpec& op,
                                        const TestFunction& f, double N,
                                        const GridSpec& x_grid,
                                        const QuadratureConfig& q) {
  ApproximantResult out;
  out.x_grid = x_grid;
  out.N = N;
  out.representation = Representation::Substituted;
  out.values.resize(x_grid.size());
  out.diagnostics.resize(x_grid.size());
  parallel_for_index(x_grid.size(), [&](std::size_t i) {
    out.values[i] = truncated_approximant_at(op, f, N, x_grid.points[i], q,
                                             &out.diagnostics[i]);
  });
  return out;
}

double adjoint_variant_at(const HausdorffOperatorSpec& op,
                          const TestFunction& f, double N, double x,
                          const QuadratureConfig& q, PointDiagnostics* diag) {
  if (!(N > 0)) throw OutOfRange("truncation parameter N must be positive");
  const KernelSpec& k = op.kernel;
  const ScalingSpec& a = op.scaling;

  OuterAccumulator acc;
  QuadratureConfig qi = q;
  qi.max_subdivisions = 800;

  auto integrand = [&](double t) {
    const double phi = k(t);
    if (phi == 0.0) return 0.0;
    const double at = a.eval(t);
    const double c = at * x;
    double tail = 0.0;
    SincProfile prof = shifted_profile(f, c, qi, &tail);
    auto res = filon_sinc(prof, N / at, qi);
    acc.max_err = std::max(acc.max_err, res.error);
    acc.max_tail = std::max(acc.max_tail, res.tail_error + tail);
    return phi * std::fabs(at) * res.value;
  };

  std::vector<double> cuts = k.breakpoints;
  if (x != 0.0) {
    for (double b : f.breakpoints) {
      // Kink crosses sigma = 0 where a(t) x = b.
      const double u = b / x;
      if (u == 0.0 || !std::isfinite(u)) continue;
      const double t = a.inv(u);
      if (std::isfinite(t)) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  // The phi |a| weight is the same as the forward operator's: probe a
  // singular origin unless f's compact support kills it.
  const bool singular_possible = !(f.numerically_compact() && x != 0.0);
  const double v = outer_kernel_integral(k, integrand, cuts, singular_possible, q);
  if (diag) {
    diag->quad_error = acc.max_err;
    diag->tail_error = acc.max_tail;
  }
  return v / kPi;
}

ApproximantResult adjoint_variant_approximant(const HausdorffOperatorSpec& op,
                                              const TestFunction& f, double N,
                                              const GridSpec& x_grid,
                                              const QuadratureConfig& q) {
  ApproximantResult out;
  out.x_grid = x_grid;
  out.N = N;
  out.representation = Representation::Substituted;
  out.values.resize(x_grid.size());
  out.diagnostics.resize(x_grid.size());
  parallel_for_index(x_grid.size(), [&](std::size_t i) {
    out.values[i] = adjoint_variant_at(op, f, N, x_grid.points[i], q,
                                       &out.diagnostics[i]);
  });
  return out;
}

namespace {

std::complex<double> complex_tail_integral(const ComplexFn& f, double a,
                                           const QuadratureConfig& q) {
  auto re = integrate_to_infinity([&](double w) { return f(w).real(); }, a, q);
  auto im = integrate_to_infinity([&](double w) { return f(w).imag(); }, a, q);
  return {re.value, im.value};
}

// (H f^)(u) by the w = a(t) u substitution, which keeps the oscillation of
// f^ at its own fixed scale: for u != 0,
//   (H f^)(u) = int phi(|u|/w) f^(sign(u) w) dw / w,
// over w with |u|/w inside the kernel support.
std::complex<double> spectral_symbol(const HausdorffOperatorSpec& op,
                                     const TestFunction& f, double u,
                                     const QuadratureConfig& q) {
  const KernelSpec& k = op.kernel;
  const double au = std::fabs(u);
  const double sgn = u >= 0 ? 1.0 : -1.0;
  const double w_lo = std::isinf(k.support_hi) ? 0.0 : au / k.support_hi;
  const bool w_unbounded = (k.support_lo == 0.0);
  const double w_hi = w_unbounded ? 0.0 : au / k.support_lo;

  auto integrand = [&](double w) {
    const double phi = k(au / w);
    if (phi == 0.0) return std::complex<double>(0.0, 0.0);
    return phi * fourier_transform(f, sgn * w, q) / w;
  };
  if (w_unbounded) {
    const double b = std::max(2.0 * std::max(w_lo, au), 1.0);
    auto head = integrate(integrand, std::max(w_lo, 1e-300), b, q);
    auto tail = complex_tail_integral(integrand, b, q);
    return head.value + tail;
  }
  return integrate(integrand, w_lo, w_hi, q).value;
}

}  // namespace

SpectralValue truncated_approximant_direct(const HausdorffOperatorSpec& op,
                                           const TestFunction& f, double N,
                                           double x,
                                           const QuadratureConfig& q) {
  if (N < 0) throw OutOfRange("truncation parameter N must be nonnegative");
  if (N == 0.0) return {0.0, 0.0, 0.0};
  if (std::isinf(op.kernel.support_hi))
    throw TailNotIntegrable(
        "direct spectral path needs a kernel with bounded support");

  QuadratureConfig qi = q;
  qi.abs_tol = q.abs_tol / (4.0 * N);
  qi.max_subdivisions = 800;
  QuadratureConfig qo = q;
  qo.max_subdivisions = 1500;

  auto integrand = [&](double u) {
    return spectral_symbol(op, f, u, qi) *
           std::exp(std::complex<double>(0.0, u * x));
  };
  const double cut[] = {0.0};
  auto est = integrate(integrand, -N, N, qo, cut);
  const auto v = est.value / (2.0 * kPi);
  return {v.real(), std::fabs(v.imag()), est.error / (2.0 * kPi)};
}

ApproximantResult function_recovery(const HausdorffOperatorSpec& op,
                                    const TestFunction& f, double N,
                                    const GridSpec& y_grid,
                                    const QuadratureConfig& q) {
  const auto& k = op.kernel;
  double mass;
  if (k.total_mass) {
    mass = *k.total_mass;
  } else {
    if (k.unbounded_support())
      throw KernelMassNotOne("kernel mass is not available");
    mass = integrate([&](double t) { return k(t); }, k.support_lo,
                     k.support_hi, q, k.breakpoints)
               .value;
  }
  if (std::fabs(mass - 1.0) > 1e-10)
    throw KernelMassNotOne("function recovery requires unit kernel mass");

  ApproximantResult out;
  out.x_grid = y_grid;
  out.N = N;
  out.representation = Representation::Substituted;
  out.values.resize(y_grid.size());
  out.diagnostics.resize(y_grid.size());
  parallel_for_index(y_grid.size(), [&](std::size_t i) {
    const TestFunction shifted = translate(f, y_grid.points[i]);
    out.values[i] = truncated_approximant_at(op, shifted, N, 0.0, q,
                                             &out.diagnostics[i]);
  });
  return out;
}

}  // namespace haus
