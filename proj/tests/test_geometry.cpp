#include <doctest.h>

#include "adsmax/geometry.hpp"

#include <random>

using namespace adsmax;

TEST_CASE("bilinear form on the reference vectors") {
  CHECK(bilinear_form(SplitVector4(1, 0, 0, 0), SplitVector4(1, 0, 0, 0)) == 1.0);
  CHECK(bilinear_form(SplitVector4(0, 0, 1, 0), SplitVector4(0, 0, 1, 0)) == -1.0);
  // the null direction that rays with small angles limit onto
  CHECK(bilinear_form(SplitVector4(1, 0, 1, 0), SplitVector4(1, 0, 1, 0)) == 0.0);
}

TEST_CASE("bilinear form is symmetric and bilinear on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const SplitVector4 x(u(rng), u(rng), u(rng), u(rng));
    const SplitVector4 y(u(rng), u(rng), u(rng), u(rng));
    const SplitVector4 z(u(rng), u(rng), u(rng), u(rng));
    const double a = u(rng), b = u(rng);
    CHECK(bilinear_form(x, y) == doctest::Approx(bilinear_form(y, x)).epsilon(1e-15));
    CHECK(bilinear_form(a * x + b * z, y) ==
          doctest::Approx(a * bilinear_form(x, y) + b * bilinear_form(z, y))
              .epsilon(1e-12));
  }
}

TEST_CASE("torus representatives of the reference boundary points") {
  const SplitVector4 v0 = torus_to_null(0.0, 0.0);
  CHECK(v0.isApprox(SplitVector4(1, 0, 1, 0)));
  const SplitVector4 v1 = torus_to_null(kPi / 2, kPi / 2);
  CHECK(v1.isApprox(SplitVector4(0, 1, 0, 1), 1e-15));
}

TEST_CASE("null/torus round trip and projective scaling") {
  const BoundaryPoint p = null_to_torus(torus_to_null(1.3, 2.1));
  CHECK(p.theta == doctest::Approx(1.3).epsilon(1e-14));
  CHECK(p.theta_prime == doctest::Approx(2.1).epsilon(1e-14));

  // positive multiples recover the same angles, negative ones the antipode
  const SplitVector4 x = 7.5 * torus_to_null(0.4, 5.9);
  const BoundaryPoint q = null_to_torus(x);
  CHECK(q.theta == doctest::Approx(0.4));
  CHECK(q.theta_prime == doctest::Approx(5.9));
  const BoundaryPoint anti = null_to_torus(-x);
  CHECK(boundary_dist(q, anti) < 1e-12);
}

TEST_CASE("null_to_torus rejects bad input") {
  CHECK_THROWS_AS(null_to_torus(SplitVector4(1, 0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(null_to_torus(SplitVector4(0, 0, 1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(null_to_torus(SplitVector4(1, 1, 1, 0.9)), std::invalid_argument);
}

TEST_CASE("causal classification of the reference pairs") {
  const BoundaryPoint o = boundary_point(0, 0);
  CHECK(causal_class(o, boundary_point(kPi / 4, kPi / 4)) == CausalClass::lightlike);
  CHECK(causal_class(o, boundary_point(kPi / 2, 0)) == CausalClass::spacelike);
  CHECK(causal_class(o, boundary_point(0, kPi / 2)) == CausalClass::timelike);
  CHECK_THROWS_AS(causal_class(o, o), std::invalid_argument);
}

TEST_CASE("causal classification matches the ambient pairing sign") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  int tested = 0;
  while (tested < 1000) {
    const BoundaryPoint p = boundary_point(ang(rng), ang(rng));
    const BoundaryPoint q = boundary_point(ang(rng), ang(rng));
    const double d = std::abs(wrap_pm_pi(p.theta - q.theta));
    const double dp = std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime));
    if (std::abs(d - dp) < 1e-6 || (d < 1e-6 && dp < 1e-6)) continue;
    ++tested;
    const double pairing = bilinear_form(p.null_rep, q.null_rep);
    const CausalClass expect =
        pairing > 0 ? CausalClass::timelike : CausalClass::spacelike;
    CHECK(causal_class(p, q) == expect);
  }
}

TEST_CASE("factor angles recombine to the torus point") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const BoundaryPoint p = boundary_point(ang(rng), ang(rng));
    const BoundaryPoint q = boundary_from_factors(p.left_angle(), p.right_angle());
    CHECK(boundary_dist(p, q) < 1e-12);
  }
}
