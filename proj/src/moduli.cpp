#include "haus/moduli.hpp"

#include <algorithm>
#include <cmath>

#include "haus/test_function.hpp"

namespace haus {

namespace {

double shift_difference_norm(const TestFunction& f, double h,
                             const LebesgueExponent& p,
                             const QuadratureConfig& q) {
  // ||f(.+h) - f||_p; the difference inherits merged breakpoints so kinks
  // land exactly on quadrature/scan nodes.
  TestFunction diff = lincomb(1.0, translate(f, h), -1.0, f);
  diff.lp_memberships = f.lp_memberships;
  if (p.is_infinite()) diff.tail_bound = 2.0 * f.tail_bound;
  return lp_norm(diff, p, q);
}

}  // namespace

ModulusEstimate modulus_estimate(const TestFunction& f, double delta,
                                 const LebesgueExponent& p,
                                 const QuadratureConfig& q, int h_grid_size) {
  if (delta < 0) throw OutOfRange("delta must be nonnegative");
  if (!p.is_infinite() && !f.in_lp(p))
    throw TailNotIntegrable("modulus needs f in the requested L^p");

  ModulusEstimate est;
  est.delta = delta;
  est.p = p;
  est.method = ModulusMethod::GridSup;
  est.h_grid_size = h_grid_size;
  if (delta == 0.0) return est;

  auto grid_sup = [&](int m) {
    double best = 0.0;
    for (int k = 1; k <= m; ++k)
      best = std::max(best, shift_difference_norm(f, delta * k / m, p, q));
    return best;
  };
  const double coarse = grid_sup(h_grid_size);
  const double fine = grid_sup(2 * h_grid_size);
  est.value = std::max(coarse, fine);
  est.refinement_gap = std::fabs(fine - coarse);
  return est;
}

std::vector<ModulusEstimate> modulus_ladder(const TestFunction& f,
                                            const std::vector<double>& deltas,
                                            const LebesgueExponent& p,
                                            const QuadratureConfig& q,
                                            int h_grid_size) {
  std::vector<ModulusEstimate> out;
  double running = 0.0;
  for (double d : deltas) {
    ModulusEstimate e = modulus_estimate(f, d, p, q, h_grid_size);
    running = std::max(running, e.value);
    e.value = running;
    out.push_back(e);
  }
  return out;
}

ModulusEstimate modulus_analytic(const std::string& f_class, double delta,
                                 const LebesgueExponent& p,
                                 double cusp_alpha) {
  ModulusEstimate est;
  est.delta = delta;
  est.p = p;
  est.method = ModulusMethod::Analytic;

  TestFunction f;
  if (f_class == "constant") {
    f = functions::constant(1.0);
  } else if (f_class == "tent") {
    f = functions::tent();
  } else if (f_class == "indicator") {
    f = functions::indicator(0.0, 1.0);
  } else if (f_class == "cusp") {
    f = functions::cusp(cusp_alpha);
  } else if (f_class == "gaussian") {
    f = functions::gaussian();
  } else {
    throw UnknownClass("no analytic modulus for class: " + f_class);
  }
  est.value = f.analytic_modulus(delta, p);
  return est;
}

double dini_integral(const std::function<double(double)>& modulus, double N,
                     DiniWeight weight, const QuadratureConfig& q) {
  if (!(N > 0)) throw OutOfRange("N must be positive");
  auto w = [weight](double t) {
    switch (weight) {
      case DiniWeight::OneOverT: return 1.0 / t;
      case DiniWeight::LogOverT: return std::fabs(std::log(t)) / t;
      case DiniWeight::Plain: return 1.0;
    }
    return 0.0;
  };
  auto integrand = [&](double t) { return modulus(t / N) * w(t); };

  // Quick dominance probe: the modulus must vanish at 0 for the singular
  // weights, otherwise the integral cannot converge.
  if (weight != DiniWeight::Plain) {
    const double probe = modulus(std::ldexp(1.0, -40) / N);
    if (probe > 1e-10)
      if (modulus(std::ldexp(1.0, -50) / N) > 0.9 * probe)
        throw DiniDivergent("modulus does not vanish fast enough at 0");
  }
  try {
    return integrate_singular_lower(integrand, 0.0, 1.0, q).value;
  } catch (const DivergentIntegral& e) {
    throw DiniDivergent(e.what());
  }
}

}  // namespace haus
