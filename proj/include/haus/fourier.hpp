#pragma once

#include <complex>
#include <vector>

#include "haus/operators.hpp"
#include "haus/oscillatory.hpp"
#include "haus/test_function.hpp"
#include "haus/types.hpp"

namespace haus {

enum class Representation { Substituted, DirectSpectral };

struct PointDiagnostics {
  double quad_error = 0.0;  // accumulated quadrature estimate at this point
  double tail_error = 0.0;  // oscillatory-tail truncation bound
};

// Sampled values of a truncated approximant on a grid.
struct ApproximantResult {
  GridSpec x_grid;
  std::vector<double> values;
  double N = 0.0;
  Representation representation = Representation::Substituted;
  std::vector<PointDiagnostics> diagnostics;
};

// f^(y) = int f(s) e^{-isy} ds; uses the declared closed form when present.
std::complex<double> fourier_transform(const TestFunction& f, double y,
                                       const QuadratureConfig& q);

// (H_N f^)ˇ on a grid via the substituted representation
//   (1/pi) int phi(t) int f(x/a(t) - s/N) sin(a(t)s)/s ds dt.
// (The 1/pi factor makes this identical to the direct spectral form below.)
ApproximantResult truncated_approximant(const HausdorffOperatorSpec& op,
                                        const TestFunction& f, double N,
                                        const GridSpec& x_grid,
                                        const QuadratureConfig& q);

// Single-point version of the above.
double truncated_approximant_at(const HausdorffOperatorSpec& op,
                                const TestFunction& f, double N, double x,
                                const QuadratureConfig& q,
                                PointDiagnostics* diag = nullptr);

struct SpectralValue {
  double value = 0.0;
  double imag_residue = 0.0;  // must stay below 1e-6 for real symmetric data
  double error = 0.0;
};

// (H_N f^)ˇ(x) = (1/2pi) int_{-N}^{N} (H f^)(u) e^{iux} du, evaluated as a
// genuine complex integral; the independent cross-check for the substituted
// representation.
SpectralValue truncated_approximant_direct(const HausdorffOperatorSpec& op,
                                           const TestFunction& f, double N,
                                           double x,
                                           const QuadratureConfig& q);

// (H*_N f^)ˇ targeting H f (not H* f):
//   (1/pi) int phi(t) |a(t)| int f(a(t)x - s/N) sin(s/a(t))/s ds dt.
ApproximantResult adjoint_variant_approximant(const HausdorffOperatorSpec& op,
                                              const TestFunction& f, double N,
                                              const GridSpec& x_grid,
                                              const QuadratureConfig& q);

// Single-point version of the above.
double adjoint_variant_at(const HausdorffOperatorSpec& op,
                          const TestFunction& f, double N, double x,
                          const QuadratureConfig& q,
                          PointDiagnostics* diag = nullptr);

// F_N(y) = (H_N (tau_y f)^)ˇ(0); approximates f itself when the kernel has
// unit mass (KernelMassNotOne otherwise).
ApproximantResult function_recovery(const HausdorffOperatorSpec& op,
                                    const TestFunction& f, double N,
                                    const GridSpec& y_grid,
                                    const QuadratureConfig& q);

}  // namespace haus
