#pragma once

#include <functional>
#include <string>
#include <vector>

#include "haus/types.hpp"

namespace haus {

// The scaling a(t) of a generalized Hausdorff operator: an odd function whose
// magnitude is decreasing, positive and bijective on (0, inf), together with
// its declared inverse.
struct ScalingSpec {
  std::string name;
  std::function<double(double)> eval;  // a(t)
  std::function<double(double)> inv;   // a^{-1}(u), i.e. a(inv(u)) = u
  // Positive grid on which |a| must strictly decrease; oddness and the
  // round trip are checked on it (and its mirror) as well.
  std::vector<double> abs_monotone_witness;

  double operator()(double t) const { return eval(t); }
};

struct ScalingValidation {
  bool passed = true;
  std::string failure;        // description of the first violated check
  double violating_point = 0; // grid point at which it failed
};

// Checks oddness (1e-12 relative), strict decrease and positivity of |a| on
// the witness grid, and the round trip |a(inv(u)) - u| <= 1e-10 (1 + |u|).
ScalingValidation validate_scaling(const ScalingSpec& a);

namespace scalings {

// a(t) = 1/t, the classical choice.
ScalingSpec reciprocal();
// a(t) = sign(t) |t|^{-power}, power > 0 (reciprocal() is power = 1).
ScalingSpec reciprocal_power(double power);

}  // namespace scalings

}  // namespace haus
