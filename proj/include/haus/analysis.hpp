#pragma once

#include "haus/quadrature.hpp"
#include "haus/test_function.hpp"
#include "haus/types.hpp"

namespace haus {

// ||f||_p over the real line.  Finite p: adaptive quadrature over the
// effective support (requires a numerically-zero tail bound, else
// TailNotIntegrable).  p = inf: max over a refinement grid that includes the
// declared breakpoints, with one grid doubling as the discretization check;
// the tail bound participates in the sup.
double lp_norm(const TestFunction& f, const LebesgueExponent& p,
               const QuadratureConfig& q);

// int f g over the real line; supports and breakpoints are merged.
double inner_product(const TestFunction& f, const TestFunction& g,
                     const QuadratureConfig& q);

}  // namespace haus
