#pragma once

namespace haus {

// sin(x)/x with a Taylor fallback near zero.
double sinc(double x);

// sin(lambda*s)/s, continuous at s = 0 (value lambda).
inline double sinc_kernel(double lambda, double s) {
  return lambda * sinc(lambda * s);
}

// Sine integral Si(x) = int_0^x sin(u)/u du.  Maclaurin series for |x| <= 4,
// continued fraction for the exponential integral E1(ix) above.  Absolute
// accuracy ~1e-15 over the whole real line.
double sine_integral(double x);

}  // namespace haus
