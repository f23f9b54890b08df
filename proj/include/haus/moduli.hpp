#pragma once

#include <functional>
#include <string>
#include <vector>

#include "haus/analysis.hpp"
#include "haus/test_function.hpp"
#include "haus/types.hpp"

namespace haus {

enum class ModulusMethod { Analytic, GridSup };

struct ModulusEstimate {
  double delta = 0.0;
  LebesgueExponent p = LebesgueExponent::infinity();
  double value = 0.0;
  ModulusMethod method = ModulusMethod::GridSup;
  int h_grid_size = 0;
  // Gap observed after one doubling of the h-grid; the honesty margin of the
  // grid sup.
  double refinement_gap = 0.0;
};

// omega(f; delta)_p = sup_{|h| <= delta} ||f(.+h) - f||_p, estimated as a sup
// over h in {delta k/m : k = 1..m} (h = delta always included).
ModulusEstimate modulus_estimate(const TestFunction& f, double delta,
                                 const LebesgueExponent& p,
                                 const QuadratureConfig& q,
                                 int h_grid_size = 32);

// Estimates along an increasing delta ladder with the running maximum folded
// in, so the returned sequence is nondecreasing by construction.
std::vector<ModulusEstimate> modulus_ladder(const TestFunction& f,
                                            const std::vector<double>& deltas,
                                            const LebesgueExponent& p,
                                            const QuadratureConfig& q,
                                            int h_grid_size = 32);

// Closed-form (or certified sharp-order) moduli for the catalog classes
// {constant, tent, indicator, cusp, gaussian}.  UnknownClass otherwise.
ModulusEstimate modulus_analytic(const std::string& f_class, double delta,
                                 const LebesgueExponent& p,
                                 double cusp_alpha = 0.5);

enum class DiniWeight { OneOverT, LogOverT, Plain };

// int_0^1 modulus(t/N) w(t) dt with the singular endpoint handled by dyadic
// refinement; DiniDivergent when the partial sums fail the Cauchy test.
double dini_integral(const std::function<double(double)>& modulus, double N,
                     DiniWeight weight, const QuadratureConfig& q);

}  // namespace haus
