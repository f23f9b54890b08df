#include <doctest.h>

#include <cmath>
#include <numbers>

#include "haus/quadrature.hpp"

using namespace haus;

namespace {
const QuadratureConfig q = QuadratureConfig::defaults();
}

TEST_CASE("adaptive integration of smooth and kinked integrands") {
  auto est = integrate([](double x) { return std::sin(x); }, 0.0,
                       std::numbers::pi, q);
  CHECK(est.value == doctest::Approx(2.0).epsilon(1e-12));

  // |x| has a kink at 0; integral over [-1, 2] is 0.5 + 2.
  const double cuts[] = {0.0};
  auto est2 = integrate([](double x) { return std::fabs(x); }, -1.0, 2.0, q,
                        cuts);
  CHECK(est2.value == doctest::Approx(2.5).epsilon(1e-12));

  // Integrable endpoint singularity 1/sqrt(x).
  auto est3 = integrate_singular_lower(
      [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, q);
  CHECK(est3.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("complex integration") {
  auto est = integrate(
      [](double x) {
        return std::exp(std::complex<double>(0.0, x));
      },
      0.0, std::numbers::pi / 2, q);
  CHECK(est.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est.value.imag() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite tails converge or are flagged divergent") {
  auto ok = integrate_to_infinity([](double t) { return 1.0 / (t * t); }, 1.0, q);
  CHECK(ok.value == doctest::Approx(1.0).epsilon(1e-8));

  auto slow = integrate_to_infinity(
      [](double t) { return std::pow(t, -1.5); }, 1.0, q);
  CHECK(slow.value == doctest::Approx(2.0).epsilon(1e-7));

  CHECK_THROWS_AS(
      integrate_to_infinity([](double t) { return 1.0 / t; }, 1.0, q),
      DivergentIntegral);
}

TEST_CASE("singular lower endpoint divergence detection") {
  CHECK_THROWS_AS(
      integrate_singular_lower([](double t) { return 1.0 / t; }, 0.0, 1.0, q),
      DivergentIntegral);
  // t^{-0.5} converges even though it blows up.
  auto est = integrate_singular_lower(
      [](double t) { return std::pow(t, -0.5); }, 0.0, 1.0, q);
  CHECK(est.value == doctest::Approx(2.0).epsilon(1e-7));
}
