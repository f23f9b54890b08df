#pragma once

// Test-side oracles, kept independent of the library's quadrature stack:
// fixed-grid composite rules only, no adaptivity, no shared code paths.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Composite Simpson on a fixed uniform grid.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n = 4000) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; i += 2) sum += 4.0 * f(a + i * h);
  for (int i = 2; i < n; i += 2) sum += 2.0 * f(a + i * h);
  return sum * h / 3.0;
}

// Dense scan maximum over [a, b].
inline double scan_max(const std::function<double(double)>& f, double a,
                       double b, int n = 20000) {
  double best = 0.0;
  for (int i = 0; i <= n; ++i)
    best = std::max(best, std::fabs(f(a + (b - a) * i / n)));
  return best;
}

// Trapezoid norm of samples on a grid (the measured-error proxy used when
// comparing against theorem bounds).
inline double trapezoid_lp(const std::vector<double>& x,
                           const std::vector<double>& v, double p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = (i == 0) ? x[0] : 0.5 * (x[i - 1] + x[i]);
    const double hi = (i + 1 == x.size()) ? x.back() : 0.5 * (x[i] + x[i + 1]);
    sum += std::pow(std::fabs(v[i]), p) * (hi - lo);
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace oracle
