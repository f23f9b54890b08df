#include "haus/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace haus {

double sinc(double x) {
  const double ax = std::fabs(x);
  if (ax >= 1e-4) return std::sin(x) / x;
  const double x2 = x * x;
  return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
}

namespace {

double si_series(double x) {
  // Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
  double term = x;
  double sum = x;
  const double x2 = x * x;
  for (int k = 1; k < 40; ++k) {
    term *= -x2 / (2.0 * k * (2.0 * k + 1.0));
    const double add = term / (2.0 * k + 1.0);
    sum += add;
    if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

// E1(ix) by the even continued fraction with modified Lentz.  For x >= 4 this
// converges in at most ~60 iterations; Si(x) = pi/2 + Im E1(ix).
double si_continued_fraction(double x) {
  const std::complex<double> z(0.0, x);
  std::complex<double> b = z + 1.0;
  std::complex<double> c(1e300, 0.0);
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  const std::complex<double> e1 = std::exp(-z) * h;
  return std::numbers::pi / 2.0 + e1.imag();
}

}  // namespace

double sine_integral(double x) {
  const double ax = std::fabs(x);
  double v = (ax <= 4.0) ? si_series(ax) : si_continued_fraction(ax);
  return x < 0 ? -v : v;
}

}  // namespace haus
