#include <doctest.h>

#include <cmath>
#include <numbers>

#include "haus/special.hpp"

using namespace haus;

TEST_CASE("sinc near and away from zero") {
  CHECK(sinc(0.0) == doctest::Approx(1.0));
  CHECK(sinc(1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sinc(2.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
  CHECK(sinc_kernel(3.0, 0.0) == doctest::Approx(3.0));
  CHECK(sinc_kernel(3.0, 1.0) == doctest::Approx(std::sin(3.0)).epsilon(1e-15));
}

TEST_CASE("sine integral against reference values") {
  // Reference values computed with 30-digit arithmetic.
  struct { double x, si; } table[] = {
      {0.25, 0.249133570319757164}, {0.5, 0.493107418043066689},
      {1.0, 0.946083070367183015},  {2.0, 1.60541297680269485},
      {4.0, 1.75820313894905306},   {4.5, 1.65414041437924398},
      {5.0, 1.54993124494467414},   {6.0, 1.42468755128050654},
      {8.0, 1.57418682170694205},   {10.0, 1.65834759421887405},
      {20.0, 1.54824170104343984},  {30.0, 1.56675654003035111},
      {50.0, 1.55161707248593589},  {100.0, 1.56222546688905629},
      {300.0, 1.57088108821374952}, {1000.0, 1.57023312196877122},
  };
  for (const auto& row : table) {
    CHECK(sine_integral(row.x) == doctest::Approx(row.si).epsilon(1e-14));
    CHECK(sine_integral(-row.x) == doctest::Approx(-row.si).epsilon(1e-14));
  }
  CHECK(sine_integral(0.0) == 0.0);
  // Limit value pi/2 at large argument.
  CHECK(sine_integral(1e8) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-7));
}
