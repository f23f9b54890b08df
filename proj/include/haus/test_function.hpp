#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "haus/types.hpp"

namespace haus {

// An evaluable real function together with the metadata the quadrature and
// norm machinery needs: effective support, a pointwise tail bound, the
// locations of kinks/jumps, declared Lp memberships, and (when available)
// closed forms for the Fourier transform and the modulus of continuity.
struct TestFunction {
  std::string label;
  std::function<double(double)> eval;
  // |f| <= tail_bound outside [-support_radius, support_radius].
  double support_radius = 0.0;
  double tail_bound = 0.0;
  // Kinks and jumps of eval, strictly increasing.  Quadratures split here.
  std::vector<double> breakpoints;
  std::vector<LebesgueExponent> lp_memberships;
  // Convention: ft(y) = int f(s) e^{-isy} ds.  Empty when no closed form.
  std::function<std::complex<double>(double)> analytic_ft;
  // (delta, p) -> omega(f; delta)_p.  Empty when no closed form.
  std::function<double(double, const LebesgueExponent&)> analytic_modulus;
  // Nonincreasing envelope: |f(y)| <= tail_envelope(|y|) for all y.  Empty
  // for compactly supported functions (implicit zero beyond the support).
  std::function<double(double)> tail_envelope;

  double operator()(double x) const { return eval(x); }
  bool in_lp(const LebesgueExponent& p) const;
  bool compactly_supported() const { return tail_bound == 0.0; }
  // Tail mass below double resolution on desk-scale windows; such functions
  // get the same support cutoffs as compact ones.
  bool numerically_compact() const { return tail_bound <= 1e-13; }
};

// f(. + y)
TestFunction translate(const TestFunction& f, double y);
// f(lambda .), lambda != 0
TestFunction dilate(const TestFunction& f, double lambda);
// c1*f + c2*g
TestFunction lincomb(double c1, const TestFunction& f, double c2,
                     const TestFunction& g);

namespace functions {

TestFunction constant(double c);
// c on [-radius, radius], zero outside.
TestFunction plateau(double c, double radius);
TestFunction indicator(double a, double b);
// (1 - |x|)_+
TestFunction tent();
// (1 - |x|)_+^alpha, 0 < alpha <= 1
TestFunction cusp(double alpha);
// exp(-(x-center)^2 / 2)
TestFunction gaussian(double center = 0.0);
// Fejer kernel on the line: (1/2pi) (sin(x/2)/(x/2))^2 = (1-cos x)/(pi x^2).
TestFunction fejer();
// Indicator of [a, b] with cubic smoothstep ramps of width w inside.
TestFunction mollified_indicator(double a, double b, double w);
// C-infinity bump supported on [center - halfwidth, center + halfwidth].
TestFunction bump(double center, double halfwidth);

// Catalog lookup used by the CLI; alpha feeds cusp / parametrized entries.
// Throws UnknownClass for unrecognized names.
TestFunction by_name(const std::string& name, double alpha = 0.5);

}  // namespace functions

}  // namespace haus
