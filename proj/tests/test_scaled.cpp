// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "doctest.h"
#include "laakso/scaled.hpp"

using laakso::ScaledDistance;

TEST_CASE("rescaling is exact and comparisons cross exponents") {
  ScaledDistance quarter = ScaledDistance::units(1, 1);
  ScaledDistance quarter_fine = ScaledDistance::units(16, 3);
  CHECK(quarter == quarter_fine);
  CHECK(quarter.rescaled_to(3).value == 16);
  CHECK(ScaledDistance::units(3, 2) < quarter);       // 3/16 < 1/4
  CHECK(ScaledDistance::units(5, 2) > quarter);       // 5/16 > 1/4
  CHECK_THROWS_AS(quarter_fine.rescaled_to(1), std::invalid_argument);
}

TEST_CASE("normalization strips factors of 4") {
  CHECK(ScaledDistance::units(64, 4).normalized() == ScaledDistance::units(1, 1));
  CHECK(ScaledDistance::units(64, 4).normalized().unit_exponent == 1);
  CHECK(ScaledDistance::units(6, 3).normalized().value == 6);
  CHECK(ScaledDistance::units(0, 5).normalized().unit_exponent == 0);
}

TEST_CASE("arithmetic at mixed exponents") {
  ScaledDistance a = ScaledDistance::units(1, 1);   // 1/4
  ScaledDistance b = ScaledDistance::units(1, 2);   // 1/16
  CHECK((a + b) == ScaledDistance::units(5, 2));
  CHECK((a - b) == ScaledDistance::units(3, 2));
  CHECK((b - a).value == -3);
  CHECK((b - a).abs() == ScaledDistance::units(3, 2));
}

TEST_CASE("decimal rendering is the exact dyadic value") {
  CHECK(ScaledDistance::units(64, 3).to_double() == 1.0);
  CHECK(ScaledDistance::units(6, 2).to_double() == 0.375);
  CHECK(ScaledDistance::units(2, 1).to_double() == 0.5);
}
