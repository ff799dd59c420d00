#include <doctest.h>

#include "adsmax/quad_diff.hpp"

#include <cmath>
#include <complex>

using namespace adsmax;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
}

TEST_CASE("principal part evaluation") {
  const PoleModel m4 = PoleModel::normal_form(4);
  CHECK(eval_q(m4, {1.0, 0.0}) == std::complex<double>(1.0, 0.0));
  const PoleModel m3 = PoleModel::normal_form(3);
  CHECK(std::abs(eval_q(m3, {0.1, 0.0}) - Complex(1000.0, 0.0)) < 1e-9);
  CHECK_THROWS_AS(eval_q(m3, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("model validation") {
  PoleModel bad;
  bad.order = 2;
  bad.coeffs = {1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  PoleModel zero_top;
  zero_top.order = 3;
  zero_top.coeffs = {0.0, 1.0};
  CHECK_THROWS_AS(zero_top.validate(), std::invalid_argument);
}

TEST_CASE("flat metric length of circles by quadrature") {
  // q = z^{-4} dz^2: density |z|^{-4}, circle of radius rho has length 2 pi / rho
  const PoleModel m = PoleModel::normal_form(4);
  for (double rho : {0.3, 0.7, 1.1}) {
    const double len = flat_circle_length(m, rho);
    CHECK(len == doctest::Approx(2.0 * pi / rho).epsilon(1e-8));
  }
}

TEST_CASE("flat density dominates |z|^{-2} on the chart neighbourhood") {
  const PoleModel m = PoleModel::normal_form(5, 0.0, 1.0);
  double min_ratio = 1e300;
  for (double rho : {0.05, 0.2, 0.5, 0.9})
    for (int a = 0; a < 16; ++a) {
      const Complex z = rho * std::exp(Complex(0.0, 2 * pi * a / 16.0));
      min_ratio = std::min(min_ratio, flat_density(m, z) * std::norm(z));
    }
  CHECK(min_ratio > 0.9);  // D = |z|^{2-n} >= 1 on |z| <= 1
}

TEST_CASE("odd natural chart: decay and pullback residual") {
  const PoleModel m = PoleModel::normal_form(5, 0.0, 1.0);  // exponent -2/3
  const NaturalChart chart(m, 1);
  // |Phi(w)| -> 0 as |w| grows
  double prev = 1e300;
  for (double t : {1.0, 4.0, 16.0, 64.0}) {
    const double mag = std::abs(chart.map(Complex(t, t)));
    CHECK(mag < prev);
    prev = mag;
  }
  // pullback residual at 50 sample points
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double re = -30.0 + 60.0 * i / 49.0;
    const double im = 0.3 + 0.6 * i;
    worst = std::max(worst, chart.pullback_residual(Complex(re, im)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("even natural chart with nonzero residue parameter") {
  const PoleModel m = PoleModel::normal_form(4, Complex(0.25, 0.1), 1.0);
  for (int k = 1; k <= 2; ++k) {
    const NaturalChart chart(m, k);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double re = -25.0 + 50.0 * i / 49.0;
      const double im = 0.4 + 0.5 * i;
      worst = std::max(worst, chart.pullback_residual(Complex(re, im)));
    }
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("chart count and auto-tuned containment") {
  const PoleModel m = PoleModel::normal_form(7, 0.0, 0.8);
  const auto charts = natural_charts(m);
  CHECK(charts.size() == 5);
  for (const auto& c : charts)
    for (double t : {0.5, 3.0, 20.0})
      CHECK(std::abs(c.map(Complex(t, t + 0.2))) < 0.8);
}

TEST_CASE("consecutive charts glue by a rigid transition") {
  // Continue chart k across its trailing edge and express the overlap in
  // chart k+1: the transition must be of the form w -> +-w + c.
  for (const PoleModel& m :
       {PoleModel::normal_form(5, 0.0, 1.0), PoleModel::normal_form(6, Complex(0.2, 0.0), 1.0)}) {
    const NaturalChart c1(m, 1), c2(m, 2);
    const double slack = 0.6 * c2.sector_width();
    std::vector<Complex> ws, wt;
    for (int i = 0; i < 12; ++i) {
      const Complex w(6.0 + i, 0.05);  // just above the shared boundary ray
      const Complex z = c1.map(w);
      const auto back = c2.inverse(z, slack);
      REQUIRE(back.has_value());
      ws.push_back(w);
      wt.push_back(*back);
    }
    // fit w_t = a w_s + b on two samples, verify on the rest
    const Complex a = (wt[1] - wt[0]) / (ws[1] - ws[0]);
    const Complex b = wt[0] - a * ws[0];
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-9);
    double res = 0.0;
    for (size_t i = 2; i < ws.size(); ++i)
      res = std::max(res, std::abs(wt[i] - (a * ws[i] + b)));
    CHECK(res <= 1e-6);
  }
}

TEST_CASE("sampled coverage of a punctured annulus") {
  const PoleModel m = PoleModel::normal_form(5, 0.0, 1.0);
  const auto charts = natural_charts(m);
  // radius reachable in every sampled direction (kept away from the pinch
  // at the gluing rays, where the images thin out)
  const int n_dirs = 40;
  const double guard = pi / (8.0 * (m.order - 2));
  double r_prime = 1e300;
  for (int d = 0; d < n_dirs; ++d) {
    const double psi = 2 * pi * d / n_dirs + guard;
    double best = 0.0;
    for (const auto& c : charts) best = std::max(best, c.ray_radius(psi));
    CHECK(best > 0.0);
    r_prime = std::min(r_prime, best);
  }
  CHECK(r_prime > 0.0);
  // every sample of the annulus below r' lies in some chart's closure
  for (int d = 0; d < n_dirs; ++d) {
    const double psi = 2 * pi * d / n_dirs + guard;
    for (double frac : {0.2, 0.6, 0.95}) {
      const Complex z = std::polar(frac * r_prime, psi);
      bool covered = false;
      for (const auto& c : charts) covered = covered || c.contains(z);
      CHECK(covered);
    }
  }
}

TEST_CASE("dimension of the space of meromorphic quadratic differentials") {
  CHECK(qd_space_dims(-2, {}).total == 6);
  const QdSpaceDims one_pole = qd_space_dims(-2, {3});
  CHECK(one_pole.total == 12);
  CHECK(one_pole.real_params == 11);
  CHECK(one_pole.circle_params == 1);
  const QdSpaceDims two_poles = qd_space_dims(-2, {3, 4});
  CHECK(two_poles.total == 20);
  CHECK(two_poles.real_params == 18);
  CHECK(two_poles.circle_params == 2);
  CHECK_THROWS_AS(qd_space_dims(0, {3}), std::invalid_argument);
}

TEST_CASE("dimension of crowned Teichmueller space") {
  CHECK(crowned_teich_dim(1, {1}) == 4);
  CHECK(crowned_teich_dim(1, {2}) == 5);
  CHECK(crowned_teich_dim(2, {1, 1}) == 14);
  CHECK_THROWS_AS(crowned_teich_dim(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(crowned_teich_dim(1, {}), std::invalid_argument);
}
