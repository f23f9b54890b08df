#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "haus/types.hpp"

namespace haus {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;
};

struct ComplexIntegralEstimate {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
};

// Single 7-15 Gauss-Kronrod panel on [a, b].
IntegralEstimate gk15_real(const RealFn& f, double a, double b);
ComplexIntegralEstimate gk15_complex(const ComplexFn& f, double a, double b);

// Globally adaptive (worst-panel-first) integration of f over [a, b].
// Optional breakpoints are pre-split so kinks and jumps sit on panel
// boundaries.  The returned error is the accumulated panel estimate.
IntegralEstimate integrate_real(const RealFn& f, double a, double b,
                                const QuadratureConfig& q,
                                std::span<const double> breakpoints = {});
ComplexIntegralEstimate integrate_complex(
    const ComplexFn& f, double a, double b, const QuadratureConfig& q,
    std::span<const double> breakpoints = {});

// Return-type-dispatching fronts, so lambdas pick the right path.
template <typename Fn>
auto integrate(const Fn& f, double a, double b, const QuadratureConfig& q,
               std::span<const double> breakpoints = {}) {
  using R = std::invoke_result_t<Fn, double>;
  if constexpr (std::is_convertible_v<R, double>)
    return integrate_real(f, a, b, q, breakpoints);
  else
    return integrate_complex(f, a, b, q, breakpoints);
}

template <typename Fn>
auto gk15(const Fn& f, double a, double b) {
  using R = std::invoke_result_t<Fn, double>;
  if constexpr (std::is_convertible_v<R, double>)
    return gk15_real(f, a, b);
  else
    return gk15_complex(f, a, b);
}

// Integral over [a, inf), a > 0, by dyadically doubled blocks with a
// geometric-decay test on the block sums.  Throws DivergentIntegral when the
// increments fail the decay test twice in a row; otherwise the extrapolated
// geometric tail is folded into the error estimate.
IntegralEstimate integrate_to_infinity(const RealFn& f, double a,
                                       const QuadratureConfig& q);

// Integral over (a, b] where the integrand may blow up at a.  Dyadic panels
// shrink toward a; same divergence test as above (catches 1/t endpoints).
IntegralEstimate integrate_singular_lower(const RealFn& f, double a, double b,
                                          const QuadratureConfig& q);

}  // namespace haus
