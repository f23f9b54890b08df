#include "haus/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "haus/special.hpp"

namespace haus {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<LebesgueExponent> all_three() {
  return {LebesgueExponent::finite(1), LebesgueExponent::finite(2),
          LebesgueExponent::infinity()};
}

double golden_max(const std::function<double(double)>& f, double lo,
                  double hi) {
  // Coarse scan, then golden-section refinement around the best sample.
  const int n = 2000;
  double best_x = lo, best = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (v > best) { best = v; best_x = x; }
  }
  double a = std::max(lo, best_x - (hi - lo) / n);
  double b = std::min(hi, best_x + (hi - lo) / n);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a); f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a); f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

bool TestFunction::in_lp(const LebesgueExponent& p) const {
  for (const auto& q : lp_memberships)
    if (q == p) return true;
  return false;
}

TestFunction translate(const TestFunction& f, double y) {
  if (y == 0.0) return f;
  TestFunction g = f;
  g.label = f.label + "<<" + std::to_string(y);
  auto base = f.eval;
  g.eval = [base, y](double x) { return base(x + y); };
  g.support_radius = f.support_radius + std::fabs(y);
  g.breakpoints.clear();
  for (double b : f.breakpoints) g.breakpoints.push_back(b - y);
  std::sort(g.breakpoints.begin(), g.breakpoints.end());
  if (f.analytic_ft) {
    auto ft = f.analytic_ft;
    g.analytic_ft = [ft, y](double u) {
      return std::exp(std::complex<double>(0.0, y * u)) * ft(u);
    };
  }
  if (f.tail_envelope) {
    auto env = f.tail_envelope;
    const double ay = std::fabs(y);
    g.tail_envelope = [env, ay](double s) { return env(std::max(0.0, s - ay)); };
  }
  return g;
}

TestFunction dilate(const TestFunction& f, double lambda) {
  if (lambda == 0.0) throw ConfigError("dilate requires lambda != 0");
  TestFunction g = f;
  g.label = f.label + "@" + std::to_string(lambda);
  auto base = f.eval;
  g.eval = [base, lambda](double x) { return base(lambda * x); };
  const double al = std::fabs(lambda);
  g.support_radius = f.support_radius / al;
  g.breakpoints.clear();
  for (double b : f.breakpoints) g.breakpoints.push_back(b / lambda);
  std::sort(g.breakpoints.begin(), g.breakpoints.end());
  if (f.analytic_ft) {
    auto ft = f.analytic_ft;
    g.analytic_ft = [ft, lambda, al](double u) { return ft(u / lambda) / al; };
  }
  if (f.tail_envelope) {
    auto env = f.tail_envelope;
    g.tail_envelope = [env, al](double s) { return env(al * s); };
  }
  g.analytic_modulus = nullptr;
  return g;
}

TestFunction lincomb(double c1, const TestFunction& f, double c2,
                     const TestFunction& g) {
  TestFunction h;
  h.label = f.label + "+" + g.label;
  auto e1 = f.eval, e2 = g.eval;
  h.eval = [c1, e1, c2, e2](double x) { return c1 * e1(x) + c2 * e2(x); };
  h.support_radius = std::max(f.support_radius, g.support_radius);
  h.tail_bound = std::fabs(c1) * f.tail_bound + std::fabs(c2) * g.tail_bound;
  h.breakpoints = f.breakpoints;
  h.breakpoints.insert(h.breakpoints.end(), g.breakpoints.begin(),
                       g.breakpoints.end());
  std::sort(h.breakpoints.begin(), h.breakpoints.end());
  h.breakpoints.erase(std::unique(h.breakpoints.begin(), h.breakpoints.end()),
                      h.breakpoints.end());
  for (const auto& p : f.lp_memberships)
    if (g.in_lp(p)) h.lp_memberships.push_back(p);
  if (f.analytic_ft && g.analytic_ft) {
    auto t1 = f.analytic_ft, t2 = g.analytic_ft;
    h.analytic_ft = [c1, t1, c2, t2](double u) {
      return c1 * t1(u) + c2 * t2(u);
    };
  }
  if (f.tail_envelope && g.tail_envelope) {
    auto v1 = f.tail_envelope, v2 = g.tail_envelope;
    h.tail_envelope = [c1, v1, c2, v2](double s) {
      return std::fabs(c1) * v1(s) + std::fabs(c2) * v2(s);
    };
  }
  return h;
}

namespace functions {

TestFunction constant(double c) {
  TestFunction f;
  f.label = "constant";
  f.eval = [c](double) { return c; };
  f.support_radius = 1e6;
  f.tail_bound = std::fabs(c);
  f.lp_memberships = {LebesgueExponent::infinity()};
  f.analytic_modulus = [](double, const LebesgueExponent&) { return 0.0; };
  return f;
}

TestFunction plateau(double c, double radius) {
  TestFunction f;
  f.label = "plateau";
  f.eval = [c, radius](double x) { return std::fabs(x) <= radius ? c : 0.0; };
  f.support_radius = radius;
  f.breakpoints = {-radius, radius};
  f.lp_memberships = all_three();
  return f;
}

TestFunction indicator(double a, double b) {
  TestFunction f;
  f.label = (a == 0 && b == 1) ? "indicator01"
            : (a == 1 && b == 2) ? "indicator12"
                                 : "indicator";
  f.eval = [a, b](double x) { return (x >= a && x <= b) ? 1.0 : 0.0; };
  f.support_radius = std::max(std::fabs(a), std::fabs(b));
  f.breakpoints = {a, b};
  f.lp_memberships = all_three();
  const double len = b - a;
  f.analytic_modulus = [len](double d, const LebesgueExponent& p) {
    if (d <= 0) return 0.0;
    const double dd = std::min(d, len);
    if (p.is_infinite()) return 1.0;
    if (p.value() == 1.0) return 2.0 * dd;
    if (p.value() == 2.0) return std::sqrt(2.0 * dd);
    return std::pow(2.0 * dd, 1.0 / p.value());
  };
  return f;
}

TestFunction tent() {
  TestFunction f;
  f.label = "tent";
  f.eval = [](double x) { return std::max(0.0, 1.0 - std::fabs(x)); };
  f.support_radius = 1.0;
  f.breakpoints = {-1.0, 0.0, 1.0};
  f.lp_memberships = all_three();
  f.analytic_ft = [](double y) {
    const double s = sinc(0.5 * y);
    return std::complex<double>(s * s, 0.0);
  };
  // Exact for delta <= 1, continued flat above (only the sub-1 range feeds
  // the bound integrals).
  f.analytic_modulus = [](double d, const LebesgueExponent& p) {
    if (d <= 0) return 0.0;
    const double dd = std::min(d, 1.0);
    if (p.is_infinite()) return dd;
    if (p.value() == 1.0) return 2.0 * dd - 0.5 * dd * dd;
    if (p.value() == 2.0) return std::sqrt(2.0 * dd * dd - dd * dd * dd);
    throw UnknownClass("tent modulus closed form: p must be 1, 2 or inf");
  };
  return f;
}

TestFunction cusp(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw InvalidAlpha("cusp exponent must lie in (0, 1]");
  TestFunction f;
  f.label = "cusp_" + std::to_string(alpha);
  // Holder-alpha peak at the origin: (1 - |x|^alpha)_+.  Dilation-type
  // operators average along rays through 0, so an alpha singularity placed
  // anywhere else is smoothed a whole order harder; this is the sharp
  // Lambda_alpha witness for the rate studies.
  f.eval = [alpha](double x) {
    const double u = 1.0 - std::pow(std::fabs(x), alpha);
    return u > 0 ? u : 0.0;
  };
  f.support_radius = 1.0;
  f.breakpoints = {-1.0, 0.0, 1.0};
  f.lp_memberships = all_three();
  f.analytic_modulus = [alpha](double d, const LebesgueExponent& p) {
    if (d <= 0) return 0.0;
    if (!p.is_infinite())
      throw UnknownClass("cusp modulus closed form: p = inf only");
    // ||x+h|^a - |x|^a| <= |h|^a, attained at the peak.
    return std::pow(std::min(d, 1.0), alpha);
  };
  return f;
}

TestFunction gaussian(double center) {
  TestFunction f;
  f.label = center == 0.0 ? "gaussian" : "gaussian@" + std::to_string(center);
  f.eval = [center](double x) {
    const double u = x - center;
    return std::exp(-0.5 * u * u);
  };
  f.support_radius = std::fabs(center) + 9.0;
  f.tail_bound = std::exp(-0.5 * 81.0);  // ~2.6e-18, numerically zero
  f.lp_memberships = all_three();
  f.analytic_ft = [center](double y) {
    const double mag = std::sqrt(2.0 * kPi) * std::exp(-0.5 * y * y);
    return mag * std::exp(std::complex<double>(0.0, -center * y));
  };
  if (center == 0.0) {
    f.analytic_modulus = [](double d, const LebesgueExponent& p) {
      if (d <= 0) return 0.0;
      if (p.is_infinite()) {
        auto gap = [d](double x) {
          return std::exp(-0.5 * x * x) -
                 std::exp(-0.5 * (x + d) * (x + d));
        };
        return golden_max(gap, -d, 4.0 + d);
      }
      if (p.value() == 2.0)
        return std::sqrt(2.0 * std::sqrt(kPi) * (1.0 - std::exp(-0.25 * d * d)));
      if (p.value() == 1.0)
        return 2.0 * std::sqrt(2.0 * kPi) *
               std::erf(d / (2.0 * std::sqrt(2.0)));
      throw UnknownClass("gaussian modulus closed form: p must be 1, 2 or inf");
    };
  }
  f.tail_envelope = [center](double s) {
    const double u = std::max(0.0, s - std::fabs(center));
    return std::exp(-0.5 * u * u);
  };
  return f;
}

TestFunction fejer() {
  TestFunction f;
  f.label = "fejer";
  f.eval = [](double x) {
    const double s = sinc(0.5 * x);
    return s * s / (2.0 * kPi);
  };
  f.support_radius = 2e4;
  f.tail_bound = 2.0 / (kPi * 4e8);
  f.lp_memberships = all_three();
  f.analytic_ft = [](double y) {
    return std::complex<double>(std::max(0.0, 1.0 - std::fabs(y)), 0.0);
  };
  f.tail_envelope = [](double s) {
    return std::min(1.0 / (2.0 * kPi), 2.0 / (kPi * std::max(s * s, 1e-30)));
  };
  return f;
}

TestFunction mollified_indicator(double a, double b, double w) {
  if (!(w > 0) || 2.0 * w > b - a)
    throw ConfigError("ramp width must satisfy 0 < 2w <= b - a");
  TestFunction f;
  f.label = "mollified_indicator";
  f.eval = [a, b, w](double x) {
    if (x <= a || x >= b) return 0.0;
    if (x >= a + w && x <= b - w) return 1.0;
    const double u = (x < a + w) ? (x - a) / w : (b - x) / w;
    return u * u * (3.0 - 2.0 * u);  // cubic smoothstep
  };
  f.support_radius = std::max(std::fabs(a), std::fabs(b));
  f.breakpoints = {a, a + w, b - w, b};
  f.lp_memberships = all_three();
  return f;
}

TestFunction bump(double center, double halfwidth) {
  TestFunction f;
  f.label = "bump";
  f.eval = [center, halfwidth](double x) {
    const double u = (x - center) / halfwidth;
    if (std::fabs(u) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
  };
  f.support_radius = std::fabs(center) + halfwidth;
  f.breakpoints = {center - halfwidth, center + halfwidth};
  f.lp_memberships = all_three();
  return f;
}

TestFunction by_name(const std::string& name, double alpha) {
  if (name == "const1" || name == "constant") return constant(1.0);
  if (name == "plateau") return plateau(1.0, 1e3);
  if (name == "indicator01") return indicator(0.0, 1.0);
  if (name == "indicator12") return indicator(1.0, 2.0);
  if (name == "tent") return tent();
  if (name == "cusp") return cusp(alpha);
  if (name == "gaussian") return gaussian();
  if (name == "fejer") return fejer();
  if (name == "mollified12") return mollified_indicator(1.0, 2.0, 0.1);
  if (name == "bump") return bump(1.5, 1.0);
  throw UnknownClass("unknown function: " + name);
}

}  // namespace functions
}  // namespace haus
