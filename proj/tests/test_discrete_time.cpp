#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "isoshift/discrete_time.hpp"
#include "isoshift/random.hpp"
#include "test_util.hpp"

using namespace isoshift;
using isoshift::test::identity;

TEST_CASE("shift_permutation performs the right-circular shift") {
  const RealMatrix p = shift_permutation(4);
  RealVector x(4);
  x << 1, 2, 3, 4;
  RealVector expected(4);
  expected << 4, 1, 2, 3;
  CHECK(max_abs(RealMatrix((p * x - expected))) == 0.0);
}

TEST_CASE("shift_permutation degenerate and full-cycle cases") {
  CHECK(shift_permutation(1)(0, 0) == 1.0);
  CHECK_THROWS_AS(shift_permutation(0), std::invalid_argument);
  for (int m : {2, 5}) {
    RealMatrix power = RealMatrix::Identity(m, m);
    const RealMatrix p = shift_permutation(m);
    for (int k = 0; k < m; ++k) power = p * power;
    CHECK(max_abs(RealMatrix(power - RealMatrix::Identity(m, m))) == 0.0);
  }
}

TEST_CASE("dt_translation at upsilon=0 is the identity") {
  CHECK(max_abs_diff(dt_translation(6, 0.0), identity(6)) <= 1e-12);
}

TEST_CASE("unit dt_translation equals the shift permutation") {
  // Oracle: the permutation matrix itself, exact by circulant diagonalization.
  for (int m : {3, 8, 16}) {
    CHECK(max_abs_diff(dt_translation(m, 1.0),
                       shift_permutation(m).cast<Complex>()) <= 1e-10);
  }
}

TEST_CASE("dt_translation by a full period is the identity") {
  for (int m : {3, 8}) {
    CHECK(max_abs_diff(dt_translation(m, double(m)), identity(m)) <= 1e-9);
  }
}

TEST_CASE("integer translations match permutation powers") {
  for (int m : {3, 8, 16}) {
    const RealMatrix p = shift_permutation(m);
    RealMatrix power = RealMatrix::Identity(m, m);
    for (int v = 0; v <= 3; ++v) {
      CHECK(max_abs_diff(dt_translation(m, double(v)), power.cast<Complex>()) <= 1e-10);
      power = p * power;
    }
  }
}

TEST_CASE("dt_translation composes additively") {
  for (int m : {3, 8, 16}) {
    for (double v1 : {0.5, 1.0, 3.0}) {
      for (double v2 : {0.5, 1.0, 3.0}) {
        const ComplexMatrix lhs = dt_translation(m, v1) * dt_translation(m, v2);
        CHECK(max_abs_diff(lhs, dt_translation(m, v1 + v2)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("fractional dt_translation is isometric and unitary") {
  for (int m : {3, 8, 16}) {
    for (double v : {0.5, 1.7, -2.3}) {
      const ComplexMatrix t = dt_translation(m, v);
      CHECK(unitarity_defect(t) <= 1e-10);
      const ComplexVector x = random_complex_vector(m, 42 + m);
      CHECK(std::abs((t * x).norm() - x.norm()) <= 1e-10);
    }
  }
}
