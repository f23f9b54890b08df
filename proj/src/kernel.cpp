#include "haus/kernel.hpp"

#include <cmath>
#include <limits>

namespace haus {
namespace kernels {

KernelSpec unit_box() {
  KernelSpec k;
  k.name = "cesaro";
  k.eval = [](double) { return 1.0; };
  k.support_lo = 0.0;
  k.support_hi = 1.0;
  k.decay = KernelDecay::Compact;
  k.total_mass = 1.0;
  return k;
}

KernelSpec bellman() {
  KernelSpec k;
  k.name = "bellman";
  k.eval = [](double t) { return 1.0 / t; };
  k.support_lo = 1.0;
  k.support_hi = std::numeric_limits<double>::infinity();
  k.decay = KernelDecay::Power;
  k.power_beta = 1.0;
  // int_1^inf dt/t diverges; no finite mass.
  return k;
}

KernelSpec riemann_liouville(double alpha) {
  if (!(alpha > 0)) throw InvalidAlpha("Riemann-Liouville exponent must be positive");
  KernelSpec k;
  k.name = "riemann-liouville";
  k.eval = [alpha](double t) { return std::pow(1.0 - t, alpha); };
  k.support_lo = 0.0;
  k.support_hi = 1.0;
  k.decay = KernelDecay::Compact;
  k.total_mass = 1.0 / (alpha + 1.0);
  return k;
}

}  // namespace kernels
}  // namespace haus
