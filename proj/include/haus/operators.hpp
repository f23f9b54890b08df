#pragma once

#include <functional>
#include <string>

#include "haus/kernel.hpp"
#include "haus/quadrature.hpp"
#include "haus/scaling.hpp"
#include "haus/test_function.hpp"

namespace haus {

// A generalized Hausdorff operator is the pair (phi, a):
//   (H f)(x)  = int phi(t) |a(t)| f(a(t) x) dt
//   (H* f)(x) = int phi(t) f(x / a(t)) dt
struct HausdorffOperatorSpec {
  std::string name;
  KernelSpec kernel;
  ScalingSpec scaling;
};

// Classical kernel form: scaling a(t) = 1/t, so that |a(t)| supplies the
// 1/|t| weight of the classical definition.
HausdorffOperatorSpec classical_operator(const KernelSpec& phi);

using ClosedForm =
    std::function<double(const TestFunction&, double, const QuadratureConfig&)>;

struct OperatorCatalogEntry {
  HausdorffOperatorSpec spec;
  ClosedForm closed_form_adjoint;  // may be empty
};

namespace operators {

OperatorCatalogEntry cesaro();
OperatorCatalogEntry bellman();
OperatorCatalogEntry riemann_liouville(double alpha);
// Names: cesaro | bellman | riemann-liouville (alpha applies to the last).
OperatorCatalogEntry by_name(const std::string& name, double alpha = 1.0);

}  // namespace operators

// (H f)(x).  Throws DivergentIntegral when the kernel-side integral fails the
// dyadic growth test (e.g. the Cesaro operator on a non-decaying f) and
// TailNotIntegrable when the kernel has unbounded support with no decay
// class.
double hausdorff_apply(const HausdorffOperatorSpec& op, const TestFunction& f,
                       double x, const QuadratureConfig& q);

// (H* f)(x) = int phi(t) f(x / a(t)) dt.
double adjoint_apply(const HausdorffOperatorSpec& op, const TestFunction& f,
                     double x, const QuadratureConfig& q);

// C* f(x) = (1/x) int_0^x f.  x = 0 returns the continuity limit f(0),
// flagged.
PointValue cesaro_closed_form(const TestFunction& f, double x,
                              const QuadratureConfig& q);

// B* f(x) = int_x^inf f(t)/t dt for x > 0.  (The defining substitution of
// the adjoint integral int_1^inf f(tx)/t dt yields exactly this; it also
// matches adjoint_apply on the bellman spec, which pins the normalization.)
double bellman_closed_form(const TestFunction& f, double x,
                           const QuadratureConfig& q);

struct RiemannLiouvilleValue {
  double value = 0.0;      // int_0^1 f(tx) (1-t)^alpha dt
  // Diagnostic: Gamma(alpha) x^{-alpha-1} times the classical-form integral
  // (1/Gamma(alpha)) int_0^x f(u)(x-u)^alpha du; equals `value` for x > 0.
  double via_classical = std::numeric_limits<double>::quiet_NaN();
  bool is_limit = false;
};

RiemannLiouvilleValue riemann_liouville_closed_form(const TestFunction& f,
                                                    double alpha, double x,
                                                    const QuadratureConfig& q);

// |<H f, g> - <f, H* g>|; bounded by the combined quadrature budget.
double duality_gap(const HausdorffOperatorSpec& op, const TestFunction& f,
                   const TestFunction& g, const QuadratureConfig& q);

}  // namespace haus
