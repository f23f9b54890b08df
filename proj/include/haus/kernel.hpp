#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "haus/types.hpp"

namespace haus {

enum class KernelDecay { Compact, Power, None };

// The kernel phi of a Hausdorff operator.  eval must vanish outside
// [support_lo, support_hi]; Power decay carries the exponent beta with
// |phi(t)| <= C |t|^-beta toward an infinite end.
struct KernelSpec {
  std::string name;
  std::function<double(double)> eval;
  double support_lo = 0.0;
  double support_hi = 0.0;  // +inf allowed when decay != Compact
  KernelDecay decay = KernelDecay::Compact;
  double power_beta = 0.0;
  std::optional<double> total_mass;  // int phi, when known
  // Interior kinks/jumps of phi; the support endpoints are implicit.
  std::vector<double> breakpoints;

  double operator()(double t) const {
    if (t < support_lo || t > support_hi) return 0.0;
    return eval(t);
  }
  bool unbounded_support() const { return std::isinf(support_hi) || std::isinf(support_lo); }
};

namespace kernels {

// chi_(0,1): the Cesaro kernel, unit mass.
KernelSpec unit_box();
// t^-1 chi_(1,inf): the Bellman kernel.
KernelSpec bellman();
// (1-t)^alpha chi_(0,1): the Riemann-Liouville kernel, mass 1/(alpha+1).
KernelSpec riemann_liouville(double alpha);

}  // namespace kernels

}  // namespace haus
