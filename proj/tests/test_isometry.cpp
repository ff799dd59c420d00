#include <doctest.h>

#include "adsmax/isometry.hpp"

#include <random>

using namespace adsmax;

namespace {

std::mt19937_64 rng(21);

Mobius random_mobius() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return Mobius::rotation(kPi * u(rng)) * Mobius::diagonal(std::exp(u(rng) - 0.5)) *
         Mobius::rotation(kPi * u(rng));
}

BoundaryPoint random_boundary() {
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  return boundary_point(ang(rng), ang(rng));
}

}  // namespace

TEST_CASE("segre matrix model carries the form to the determinant") {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const SplitVector4 x(u(rng), u(rng), u(rng), u(rng));
    CHECK(segre_mat(x).determinant() == doctest::Approx(-bilinear_form(x, x)).epsilon(1e-13));
    CHECK(segre_unmat(segre_mat(x)).isApprox(x, 1e-14));
  }
}

TEST_CASE("identity pair gives the identity representation") {
  const IsometryPair g = isometry_from_pair(Mobius::identity(), Mobius::identity());
  CHECK(g.rep4.isApprox(Eigen::Matrix4d::Identity(), 1e-15));
}

TEST_CASE("rejects non-unimodular factors") {
  Eigen::Matrix2d bad;
  bad << 2, 0, 0, 1;  // det = 2
  CHECK_THROWS_AS(isometry_from_pair(bad, Eigen::Matrix2d::Identity()),
                  std::invalid_argument);
}

TEST_CASE("left factor acts on the left angle only") {
  const IsometryPair g =
      isometry_from_pair(Mobius::diagonal(std::exp(1.0)), Mobius::identity());
  for (int i = 0; i < 50; ++i) {
    const BoundaryPoint p = random_boundary();
    const BoundaryPoint gp = g.apply(p);
    CHECK(proj_angle_dist(gp.right_angle(), p.right_angle()) < 1e-12);
  }
}

TEST_CASE("factorwise Moebius action matches the 4x4 action on 200 samples") {
  for (int i = 0; i < 200; ++i) {
    const Mobius a = random_mobius(), b = random_mobius();
    const IsometryPair g = isometry_from_pair(a, b);
    CHECK(form_preservation_error(g.rep4) < 1e-12);
    const BoundaryPoint p = random_boundary();
    const BoundaryPoint gp = g.apply(p);
    CHECK(proj_angle_dist(gp.left_angle(), a(p.left_angle())) < 1e-10);
    CHECK(proj_angle_dist(gp.right_angle(), b(p.right_angle())) < 1e-10);
  }
}

TEST_CASE("representation is a homomorphism") {
  for (int i = 0; i < 50; ++i) {
    const Mobius a1 = random_mobius(), b1 = random_mobius();
    const Mobius a2 = random_mobius(), b2 = random_mobius();
    const Eigen::Matrix4d lhs = isometry_from_pair(a1 * a2, b1 * b2).rep4;
    const Eigen::Matrix4d rhs =
        isometry_from_pair(a1, b1).rep4 * isometry_from_pair(a2, b2).rep4;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("causal classes are isometry invariant") {
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  int tested = 0;
  while (tested < 300) {
    const BoundaryPoint p = random_boundary(), q = random_boundary();
    const double d = std::abs(wrap_pm_pi(p.theta - q.theta));
    const double dp = std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime));
    if (std::abs(d - dp) < 1e-4 || (d < 1e-4 && dp < 1e-4)) continue;
    ++tested;
    const IsometryPair g = isometry_from_pair(random_mobius(), random_mobius());
    CHECK(causal_class(g.apply(p), g.apply(q)) == causal_class(p, q));
  }
}

TEST_CASE("fixed points of a diagonal hyperbolic element") {
  const FixedPoints fp = fixed_points(Mobius::diagonal(2.0));  // eigenvalues 2, 1/2
  CHECK(proj_angle_dist(fp.attracting, 0.0) < 1e-14);
  CHECK(proj_angle_dist(fp.repelling, kPi / 2) < 1e-14);
}

TEST_CASE("fixed points are conjugation equivariant") {
  for (int i = 0; i < 30; ++i) {
    std::uniform_real_distribution<double> u(0.1, 1.4);
    const Mobius r = Mobius::rotation(u(rng));
    const Mobius a = Mobius::diagonal(2.0);
    const FixedPoints base = fixed_points(a);
    const FixedPoints conj = fixed_points(r * a * r.inverse());
    CHECK(proj_angle_dist(conj.attracting, r(base.attracting)) < 1e-12);
    CHECK(proj_angle_dist(conj.repelling, r(base.repelling)) < 1e-12);
  }
}

TEST_CASE("power iteration converges to the attracting direction") {
  for (int i = 0; i < 30; ++i) {
    Mobius a = random_mobius();
    if (!a.hyperbolic()) a = a * Mobius::diagonal(3.0);
    if (!a.hyperbolic()) continue;
    const FixedPoints fp = fixed_points(a);
    // the attracting angle is fixed
    CHECK(proj_angle_dist(a(fp.attracting), fp.attracting) < 1e-9);
    double angle = fp.attracting + 0.7;  // generic start
    for (int it = 0; it < 200; ++it) angle = a(angle);
    CHECK(proj_angle_dist(angle, fp.attracting) < 1e-8);
  }
}

TEST_CASE("non-hyperbolic input is rejected") {
  CHECK_THROWS_AS(fixed_points(Mobius::rotation(0.3)), std::invalid_argument);
}

TEST_CASE("attracting pair of powers and boundary convergence") {
  const Mobius a = random_mobius() * Mobius::diagonal(2.5);
  const Mobius b = random_mobius() * Mobius::diagonal(1.9);
  if (!a.hyperbolic() || !b.hyperbolic()) return;
  const IsometryPair g = isometry_from_pair(a, b);
  const LimitFixedPair fixed = limit_fixed_pair(g);

  // x^{++}(g^n) = x^{++}(g)
  const IsometryPair g3 = g * g * g;
  CHECK(boundary_dist(limit_fixed_pair(g3).pp, fixed.pp) < 1e-9);

  // iterates of a generic boundary point converge to x^{++}
  SplitVector4 x = torus_to_null(0.9, 2.0);
  for (int it = 0; it < 60; ++it) x = (g.rep4 * x).normalized();
  CHECK(boundary_dist(null_to_torus(x), fixed.pp) < 1e-9);
}

TEST_CASE("three-point Moebius interpolation") {
  const std::array<double, 3> src{0.0, kPi / 4, kPi / 2};
  const std::array<double, 3> dst{0.3, 0.8, 1.4};
  const Mobius m = Mobius::from_three_angles(src, dst);
  for (int i = 0; i < 3; ++i) CHECK(proj_angle_dist(m(src[i]), dst[i]) < 1e-12);
  // opposite cyclic orientation is rejected
  CHECK_THROWS_AS(Mobius::from_three_angles(src, {0.3, 1.4, 0.8}), std::invalid_argument);
}
