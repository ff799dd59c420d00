#include <doctest.h>

#include "adsmax/frame.hpp"
#include "adsmax/isometry.hpp"
#include "adsmax/osculating.hpp"

#include <random>

using namespace adsmax;

namespace {

// Independent transcription of the connection coefficients from the frame
// derivative relations, used as an oracle for connection_at.
ConnectionSample transcription(const PhiJet& j, Cplx q) {
  Matrix4cd U = Matrix4cd::Zero(), V = Matrix4cd::Zero();
  const double ep = std::exp(j.phi), em = std::exp(-j.phi);
  // d v1 = phi_w v1 dw - phi_wb v1 dwb + q e^{-phi} N dw + e^{phi} sigma dwb
  U(0, 0) = j.phi_w;
  V(0, 0) = -j.phi_wbar;
  U(2, 0) = q * em;
  V(3, 0) = ep;
  // d v2 = -phi_w v2 dw + phi_wb v2 dwb + qb e^{-phi} N dwb + e^{phi} sigma dw
  U(1, 1) = -j.phi_w;
  V(1, 1) = j.phi_wbar;
  V(2, 1) = std::conj(q) * em;
  U(3, 1) = ep;
  // d N = q e^{-phi} v2 dw + qb e^{-phi} v1 dwb
  U(1, 2) = q * em;
  V(0, 2) = std::conj(q) * em;
  // d sigma = e^{phi} (v1 dw + v2 dwb)
  U(0, 3) = ep;
  V(1, 3) = ep;
  return {U, V};
}

}  // namespace

TEST_CASE("connection at the horospherical data") {
  const ConnectionSample c = connection_at(PhiJet{}, Cplx(1, 0));
  Matrix4cd u0 = Matrix4cd::Zero(), v0 = Matrix4cd::Zero();
  u0(0, 3) = u0(1, 2) = u0(2, 0) = u0(3, 1) = 1.0;
  v0(0, 2) = v0(1, 3) = v0(2, 1) = v0(3, 0) = 1.0;
  CHECK((c.U - u0).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c.V - v0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("connection matches an independent transcription on random jets") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int i = 0; i < 40; ++i) {
    PhiJet j;
    j.phi = u(rng);
    const Cplx pw(u(rng), u(rng));
    j.phi_w = pw;
    j.phi_wbar = std::conj(pw);
    const Cplx q(u(rng), u(rng));
    const ConnectionSample a = connection_at(j, q);
    const ConnectionSample b = transcription(j, q);
    CHECK((a.U - b.U).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((a.V - b.V).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("zero differential kills the q-entries") {
  PhiJet j;
  j.phi = 0.3;
  const ConnectionSample c = connection_at(j, Cplx(0, 0));
  CHECK(std::abs(c.U(1, 2)) == 0.0);
  CHECK(std::abs(c.U(2, 0)) == 0.0);
  CHECK(std::abs(c.V(0, 2)) == 0.0);
  CHECK(std::abs(c.V(2, 1)) == 0.0);
}

TEST_CASE("flatness residual vanishes for the horospherical data") {
  const ConstantSource src;
  CHECK(flatness_residual(src, Cplx(0.4, 0.8), 1e-4) < 1e-10);
}

TEST_CASE("flatness residual flags a non-solution bump") {
  // phi = bump that does not solve the vortex equation
  class Bump : public ConnectionSource {
   public:
    PhiJet jet(Cplx w) const override {
      PhiJet j;
      const double r2 = std::norm(w);
      j.phi = 0.5 * std::exp(-r2);
      const Cplx dw = -0.5 * std::exp(-r2) * std::conj(w);  // d/dw of 0.5 e^{-|w|^2}
      j.phi_w = dw;
      j.phi_wbar = std::conj(dw);
      return j;
    }
    Cplx q(Cplx) const override { return Cplx(1, 0); }
  };
  CHECK(flatness_residual(Bump{}, Cplx(0.3, 0.2), 1e-4) > 0.1);
}

TEST_CASE("horospherical closed-form oracle for the integrator") {
  const HorosphericalRef& ref = horospherical_ref();
  const ConstantSource src;
  const std::vector<Cplx> path{Cplx(0, 0), Cplx(1.1, 0.4), Cplx(0.2, 1.1), Cplx(-0.6, 0.2)};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.drift_budget = 1e-7;
  const FrameField f = integrate_frame(path, src, ref.frame(path.front()), opts);
  CHECK((f.endpoint() - ref.frame(path.back())).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(f.unitarity_drift < 1e-7);
  CHECK(f.reality_drift < 1e-7);
}

TEST_CASE("constant path leaves the frame unchanged") {
  const ConstantSource src;
  const Matrix4cd f0 = horospherical_ref().frame(Cplx(0.3, 0.3));
  const std::vector<Cplx> path{Cplx(0.3, 0.3), Cplx(0.3, 0.3)};
  const FrameField f = integrate_frame(path, src, f0);
  CHECK((f.endpoint() - f0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("forward and reversed paths compose to the identity") {
  const ConstantSource src;
  const Matrix4cd f0 = horospherical_ref().frame(Cplx(0, 0));
  const std::vector<Cplx> fwd{Cplx(0, 0), Cplx(0.9, 0.2), Cplx(0.5, 0.9)};
  const std::vector<Cplx> bwd{Cplx(0.5, 0.9), Cplx(0.9, 0.2), Cplx(0, 0)};
  IntegrateOptions opts;
  opts.step = 1e-3;
  const FrameField f = integrate_frame(fwd, src, f0, opts);
  const FrameField back = integrate_frame(bwd, src, f.endpoint(), opts);
  CHECK((back.endpoint() - f0).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("halving the step cuts the endpoint error about sixteenfold") {
  const HorosphericalRef& ref = horospherical_ref();
  const ConstantSource src;
  const std::vector<Cplx> path{Cplx(0, 0), Cplx(0.8, 0.5)};
  auto err = [&](double h) {
    IntegrateOptions opts;
    opts.step = h;
    opts.drift_budget = 1.0;
    const FrameField f = integrate_frame(path, src, ref.frame(path.front()), opts);
    return (f.endpoint() - ref.frame(path.back())).cwiseAbs().maxCoeff();
  };
  const double e1 = err(4e-2), e2 = err(2e-2);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("embedding extraction on the horospherical frame") {
  const HorosphericalRef& ref = horospherical_ref();
  const ConstantSource src;
  const std::vector<Cplx> path{Cplx(-0.4, -0.2), Cplx(0.8, 0.6)};
  IntegrateOptions opts;
  opts.step = 1e-3;
  const FrameField f = integrate_frame(path, src, ref.frame(path.front()), opts);
  const EmbeddingPath emb = extract_embedding(f, src, 1e-7);
  double sigma_err = 0.0;
  for (size_t k = 0; k < emb.t.size(); ++k)
    sigma_err = std::max(sigma_err, (emb.sigma[k] - horospherical_embedding(emb.w[k]))
                                        .cwiseAbs()
                                        .maxCoeff());
  CHECK(sigma_err < 1e-8);
  CHECK(emb.max_quadric_defect < 1e-7);
  CHECK(emb.max_metric_defect < 1e-6);  // e^{2 phi} = 1 exactly on this surface
  CHECK(emb.max_q_defect < 1e-6);       // recovered q = 1
}

TEST_CASE("osculating map of the reference frame") {
  const HorosphericalRef& ref = horospherical_ref();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const Cplx w(u(rng), u(rng));
    const Eigen::Matrix4d g = osculate(ref.frame(w), w);
    CHECK((g - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  }
  // constant osculation: F = M F0 gives back M at every point
  const Mobius a = Mobius::rotation(0.7) * Mobius::diagonal(1.3);
  const Mobius b = Mobius::rotation(0.2) * Mobius::diagonal(0.9);
  const Eigen::Matrix4d m = isometry_from_pair(a, b).rep4;
  for (int i = 0; i < 10; ++i) {
    const Cplx w(u(rng), u(rng));
    const Eigen::Matrix4d g = osculate(m.cast<Cplx>() * ref.frame(w), w);
    CHECK((g - m).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("form preservation of osculating maps along integrated frames") {
  const HorosphericalRef& ref = horospherical_ref();
  const SyntheticDecaySource src(1e-2);
  const std::vector<Cplx> path{Cplx(0, 1.0), Cplx(1.2, 1.2)};
  IntegrateOptions opts;
  opts.step = 1e-3;
  const FrameField f = integrate_frame(path, src, ref.frame(path.front()), opts);
  for (const FrameSample& s : f.samples) {
    const Eigen::Matrix4d g = osculate(s.F, s.w, 1e-6);
    CHECK(form_preservation_error(g) <= 1e-8);
  }
}
