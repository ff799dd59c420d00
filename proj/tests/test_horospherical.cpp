#include <doctest.h>

#include "adsmax/horospherical.hpp"

#include <random>

using namespace adsmax;

TEST_CASE("U0 and V0 are mutually inverse") {
  const HorosphericalRef& ref = horospherical_ref();
  CHECK((ref.U0 * ref.V0 - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((ref.V0 * ref.U0 - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("constant unitary diagonaliser") {
  const HorosphericalRef& ref = horospherical_ref();
  CHECK((ref.R * ref.R_inv - Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const Cplx w(u(rng), u(rng));
    const Matrix4cd s = ref.U0 * w + ref.V0 * std::conj(w);
    const Matrix4cd d = ref.R_inv * s * ref.R;
    const Eigen::Vector4d want = ref.exponents(w);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        if (r == c)
          CHECK(std::abs(d(r, c) - Cplx(want[r], 0.0)) < 1e-12);
        else
          CHECK(std::abs(d(r, c)) < 1e-12);
      }
  }
}

TEST_CASE("frame and closed-form embedding agree") {
  const HorosphericalRef& ref = horospherical_ref();
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    const Cplx w(u(rng), u(rng));
    const Matrix4cd f = ref.frame(w);
    CHECK((f * ref.frame_inverse(w) - Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
          1e-11);
    const SplitVector4 sigma = horospherical_embedding(w);
    CHECK((f.col(3).real() - sigma).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(f.col(3).imag().cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(bilinear_form(sigma, sigma) + 1.0) < 1e-12);
    // frame preserves the Hermitian (2,2) form
    const Eigen::Matrix4d& J = split_form_matrix();
    CHECK((f.adjoint() * J * f - J.cast<Cplx>()).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("embedding at the origin") {
  const SplitVector4 s = horospherical_embedding(Cplx(0, 0));
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 0.0);
  CHECK(s[2] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s[3] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bilinear_form(s, s) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("real-ray projective limit hits (1,0,1,0)") {
  const SplitVector4 v = horospherical_embedding(Cplx(12.0, 0.0)).normalized();
  const SplitVector4 want = SplitVector4(1, 0, 1, 0).normalized();
  CHECK((v - want).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("diagonal ray limit lies on the [1,s,1,s] segment") {
  const double t = 12.0;
  const Cplx w(t / std::sqrt(2.0), t / std::sqrt(2.0) + 0.8);
  SplitVector4 v = horospherical_embedding(w);
  v.normalize();
  CHECK(std::abs(v[0] - v[2]) < 1e-10);
  CHECK(std::abs(v[1] - v[3]) < 1e-10);
  CHECK(v[0] > 0.0);
  CHECK(v[1] / v[0] > 0.0);  // s > 0
}

TEST_CASE("disc model round trip") {
  const SplitVector4 center(0, 0, 1, 0);
  const DiskModelPoint p = to_disk_model(center);
  CHECK(p.zx == 0.0);
  CHECK(p.zy == 0.0);
  CHECK(p.wx == 1.0);
  CHECK(p.wy == 0.0);

  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 100; ++i) {
    const SplitVector4 s = horospherical_embedding(Cplx(u(rng), u(rng)));
    const SplitVector4 back = from_disk_model(to_disk_model(s));
    CHECK((back - s).cwiseAbs().maxCoeff() < 1e-10);
  }
  CHECK_THROWS_AS(to_disk_model(SplitVector4(1, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("disc model limit of the horospherical ray matches the torus point") {
  // along the real axis |z| -> 1 and the angles approach (0, 0)
  const SplitVector4 s = horospherical_embedding(Cplx(8.0, 0.0));
  const DiskModelPoint p = to_disk_model(s, 1e-5);
  CHECK(std::hypot(p.zx, p.zy) > 0.999);
  CHECK(std::abs(std::atan2(p.zy, p.zx)) < 1e-6);
  CHECK(std::abs(std::atan2(p.wy, p.wx)) < 1e-6);
}
