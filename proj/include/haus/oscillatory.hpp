#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "haus/quadrature.hpp"
#include "haus/types.hpp"

namespace haus {

struct OscillatoryResult {
  double value = 0.0;
  double error = 0.0;       // quadrature + interpolation estimate
  double tail_error = 0.0;  // bound attributed to the truncated tails
  int lobes_used = 0;
  bool converged = true;
};

// int_R g(s) sin(lambda s)/s ds for bounded g, by half-period partition of
// the axis plus Euler acceleration of the alternating lobe series.  Lobes
// stop early when g's support is exhausted; otherwise the accelerated
// remainder must reach the requested tolerance within q.acceleration_terms
// lobes or OscillatoryTailNotConverged is thrown.
OscillatoryResult sinc_integral(const RealFn& g, double lambda,
                                const QuadratureConfig& q,
                                std::span<const double> breakpoints = {},
                                double support_radius =
                                    std::numeric_limits<double>::infinity());

// Description of the slowly varying factor for the panelized engine below.
// The core window [core_lo, core_hi] (which must contain 0) is integrated
// exactly; beyond it g equals the given constants up to a nonincreasing
// envelope whose weighted tail is folded into the error bound.
struct SincProfile {
  std::function<double(double)> eval;
  std::vector<double> breakpoints;
  double core_lo = -1.0;
  double core_hi = 1.0;
  double const_below = 0.0;  // g on (-inf, core_lo], up to the envelope
  double const_above = 0.0;  // g on [core_hi, inf), up to the envelope
  // |g(s) - const_side| <= envelope(|s|) outside the core; empty means the
  // constants are exact there.
  std::function<double(double)> envelope;
};

// int_R g(s) sin(lambda s)/s ds by breakpoint-aware adaptive panels with
// closed-form sinc moments (sine-integral differences and trigonometric
// moment recursions).  Panel count depends on g's smoothness, not on lambda,
// which keeps the truncated approximants affordable on large-N ladders.
OscillatoryResult filon_sinc(const SincProfile& g, double lambda,
                             const QuadratureConfig& q);

}  // namespace haus
