#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace haus {

// Numerical failures are reported through this hierarchy. Divergence of a
// *bound* integral is a value (see bounds.hpp), not an exception; divergence
// of an operator evaluation is an exception.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TailNotIntegrable : Error { using Error::Error; };
struct DivergentIntegral : Error { using Error::Error; };
struct OscillatoryTailNotConverged : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct InvalidAlpha : Error { using Error::Error; };
struct UnknownClass : Error { using Error::Error; };
struct DiniDivergent : Error { using Error::Error; };
struct KernelMassNotOne : Error { using Error::Error; };
struct DegenerateZeroError : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Exponent p of a Lebesgue norm: a finite real >= 1 or infinity.
class LebesgueExponent {
 public:
  static LebesgueExponent finite(double p) {
    if (!(p >= 1.0) || std::isinf(p))
      throw ConfigError("Lebesgue exponent must satisfy 1 <= p < inf");
    return LebesgueExponent(p);
  }
  static LebesgueExponent infinity() {
    return LebesgueExponent(std::numeric_limits<double>::infinity());
  }
  static LebesgueExponent parse(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return infinity();
    return finite(std::stod(s));
  }

  bool is_infinite() const { return std::isinf(p_); }
  // Finite value; call only when !is_infinite().
  double value() const {
    if (is_infinite()) throw ConfigError("finite exponent required");
    return p_;
  }
  std::string str() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p_);
    return buf;
  }

  friend bool operator==(const LebesgueExponent& a, const LebesgueExponent& b) {
    return a.p_ == b.p_ || (a.is_infinite() && b.is_infinite());
  }

 private:
  explicit LebesgueExponent(double p) : p_(p) {}
  double p_;
};

enum class GridRole { XGrid, NLadder, HGrid, SGrid };

// A strictly increasing, nonempty list of sample points.
struct GridSpec {
  std::vector<double> points;
  GridRole role = GridRole::XGrid;

  GridSpec() = default;
  GridSpec(std::vector<double> pts, GridRole r) : points(std::move(pts)), role(r) {
    if (points.empty()) throw ConfigError("grid must be nonempty");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
      if (!(points[i] < points[i + 1]))
        throw ConfigError("grid points must be strictly increasing");
  }

  static GridSpec linear(double a, double b, int n, GridRole role) {
    if (n < 1) throw ConfigError("grid needs at least one point");
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i)
      pts[i] = (n == 1) ? a : a + (b - a) * i / (n - 1);
    return GridSpec(std::move(pts), role);
  }

  // {first, 2*first, 4*first, ...}, count entries.
  static GridSpec dyadic(double first, int count, GridRole role) {
    std::vector<double> pts(count);
    for (int i = 0; i < count; ++i) pts[i] = first * std::ldexp(1.0, i);
    return GridSpec(std::move(pts), role);
  }

  std::size_t size() const { return points.size(); }
};

struct QuadratureConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  int max_subdivisions = 4000;
  // Hard cutoff S for the tails of sin-integrals; beyond it only the
  // accelerated/extrapolated remainder is used.
  double oscillatory_truncation = 1e5;
  // Half-period series acceleration depth (number of lobes fed to the
  // Euler transform).
  int acceleration_terms = 48;

  static QuadratureConfig defaults() { return {}; }
  // Relaxed tolerances for the oscillatory approximant paths.
  static QuadratureConfig oscillatory() {
    QuadratureConfig q;
    q.abs_tol = 1e-7;
    q.rel_tol = 1e-4;
    return q;
  }
  void validate() const {
    if (abs_tol <= 0 || rel_tol <= 0)
      throw ConfigError("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
      throw ConfigError("max_subdivisions must be >= 1");
    if (acceleration_terms < 4)
      throw ConfigError("acceleration_terms must be >= 4");
  }
};

// Value of a closed-form operator at a point; is_limit marks evaluation at
// x = 0 via the continuity limit instead of the defining integral.
struct PointValue {
  double value = 0.0;
  bool is_limit = false;
};

}  // namespace haus
