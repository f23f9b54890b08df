#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "haus/operators.hpp"
#include "haus/types.hpp"

namespace haus {

// delta -> omega(f; delta)_p for the fixed exponent of the statement.
using ModulusFn = std::function<double(double)>;

// Right-hand side of an approximation-rate statement.  A nullopt term is
// DIVERGENT (detected by the dyadic growth test); divergence is a value
// here, not an exception.
struct BoundReport {
  std::optional<double> term1;
  std::optional<double> term2;
  std::optional<double> total;  // term1 + term2 when both are finite
  // Factor multiplying the error norm on the statement's left-hand side:
  // 1/2 (finite p > 1), 1 (p = 1), pi (sup norm).  Never folded into total.
  double normalizer = 1.0;
  double N = 0.0;
  LebesgueExponent p = LebesgueExponent::infinity();
  // Cap applied to the modulus inside the integrals (2 ||f||_p is always
  // valid); +inf when the raw modulus was used.
  double modulus_cap = std::numeric_limits<double>::infinity();

  // Implied bound on the error norm: total / normalizer.
  std::optional<double> error_bound() const {
    if (!total) return std::nullopt;
    return *total / normalizer;
  }
};

// T(s) = |a^{-1}(1/s)|: the inner t-integrals of the second terms run over
// |t| >= T(s).  Verified against |a(T)| = 1/|s| before returning.
double tail_set_lower_limit(const ScalingSpec& a, double s);

// Theorem-1 right-hand side for finite p:
//   2 int |phi| |a|^{1/p} omega(1/(|a|N))_p dt
//   + int omega(|s|/N)_p/|s| int_{|t|>=T(s)} |phi| |a|^{1/p} dt ds,
// with the modulus capped at `modulus_cap` inside both integrals.
BoundReport theorem1_rhs(const HausdorffOperatorSpec& op,
                         const ModulusFn& omega_p, double N,
                         const LebesgueExponent& p, double modulus_cap,
                         const QuadratureConfig& q);

// Theorem-2 right-hand side (sup norm, normalizer pi).
BoundReport theorem2_rhs(const HausdorffOperatorSpec& op,
                         const ModulusFn& omega, double N, double modulus_cap,
                         const QuadratureConfig& q);

// Pointwise Lemma-1 right-hand side at x, divided by pi, with the actual
// difference |f(x/a - s/N) - f(x/a)| in the integrands (no modulus
// shortcut).  Dominates |H* f(x) - (H_N f^)ˇ(x)|.
double lemma1_pointwise_rhs(const HausdorffOperatorSpec& op,
                            const TestFunction& f, double N, double x,
                            const QuadratureConfig& q);

// Same for the non-adjoint variant: inner |s| <= |a(t)|, tail
// |t| >= |a^{-1}(s)|, weight phi |a| in the tail term.  Dominates
// |H f(x) - (H*_N f^)ˇ(x)|.
double lemma2_pointwise_rhs(const HausdorffOperatorSpec& op,
                            const TestFunction& f, double N, double x,
                            const QuadratureConfig& q);

}  // namespace haus
