#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haus/bounds.hpp"
#include "haus/fourier.hpp"
#include "haus/operators.hpp"
#include "haus/types.hpp"

namespace haus {

struct RateReport {
  std::string operator_name;
  std::string f_label;
  LebesgueExponent p = LebesgueExponent::infinity();
  std::vector<double> n_ladder;
  std::vector<double> errors;
  double fitted_slope = 0.0;
  double fit_r_squared = 0.0;
  double predicted_slope = 0.0;
  // Per-N bound on the error norm (theorem RHS / normalizer); +inf when the
  // bound integral is divergent.  For the approximate-identity family, where
  // the statement carries no explicit constant, this is the predicted-rate
  // reference line anchored at the first ladder point.
  std::vector<double> bound_values;
  // error * N / log N, the diagnostic for log-corrected first-order rates.
  std::vector<double> log_corrected_ratio;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares on (log N, log error).  DegenerateZeroError when any error
// sits at or below the numerical floor (1e-12) or fewer than 3 points.
RateFit fit_rate(const std::vector<double>& n_ladder,
                 const std::vector<double>& errors);

enum class StudyTarget { Adjoint, Forward };

// Per-N error of the truncated approximant against the exact operator on a
// fixed x-window (4x the support radius), with theorem bounds alongside.
// target = Adjoint: (H_N f^)ˇ vs H* f;  Forward: (H*_N f^)ˇ vs H f.
RateReport convergence_study(const HausdorffOperatorSpec& op,
                             const TestFunction& f, StudyTarget target,
                             const LebesgueExponent& p,
                             const GridSpec& n_ladder,
                             const QuadratureConfig& q);

// (F_r * f)(x) with the Fejer dilates F_r(x) = r F(r x).
double fejer_convolution(const TestFunction& f, double r, double x,
                         const QuadratureConfig& q);

// Fejer approximate-identity error ladder over r, with the log-corrected
// ratio column filled for the alpha = 1 comparison.
RateReport approximate_identity_study(const TestFunction& f,
                                      const LebesgueExponent& p,
                                      const GridSpec& r_ladder,
                                      const QuadratureConfig& q);

struct DivergenceRow {
  double S = 0.0;
  double bellman_bound = 0.0;  // grows ~ log S
  double cesaro_bound = 0.0;   // saturates once S >= 1
};

// Theorem-2 second term with the inner t-integral truncated at t <= S and
// the outer s fixed to the Dini-safe window 1/2 <= |s| <= 1.  The modulus is
// evaluated directly at |s| (fold any N into the passed map).
std::vector<DivergenceRow> bellman_divergence_demo(
    const GridSpec& S_ladder, const ModulusFn& modulus,
    const QuadratureConfig& q);

// Sup error of function_recovery over y_grid per N.
RateReport recovery_study(const HausdorffOperatorSpec& op,
                          const TestFunction& f, const GridSpec& n_ladder,
                          const GridSpec& y_grid, const QuadratureConfig& q);

// The fixed x-window grid the studies measure norms on.
GridSpec study_grid(const TestFunction& f);

// delta -> omega(f; delta)_p: the declared closed form when present, else a
// monotone interpolant of grid-sup estimates on a log ladder.
ModulusFn modulus_function(const TestFunction& f, const LebesgueExponent& p,
                           const QuadratureConfig& q);

}  // namespace haus
