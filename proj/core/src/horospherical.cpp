#include "adsmax/horospherical.hpp"

#include <cmath>

namespace adsmax {

namespace {

HorosphericalRef build_ref() {
  HorosphericalRef ref;
  const PhiJet zero_jet;
  const ConnectionSample c = connection_at(zero_jet, Cplx(1.0, 0.0));
  ref.U0 = c.U;
  ref.V0 = c.V;

  Matrix4cd a0 = Matrix4cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  a0(0, 0) = s;
  a0(0, 1) = s;
  a0(1, 0) = Cplx(0.0, -s);
  a0(1, 1) = Cplx(0.0, s);
  a0(2, 2) = s;
  a0(2, 3) = s;
  a0(3, 2) = -s;
  a0(3, 3) = s;
  ref.A0 = a0;
  ref.A0_inv = a0.inverse();

  // Eigendecomposition at w = 2 + i, where the four exponents 4, 2, -4, -2
  // are distinct (w = 1 + i would be degenerate).
  const Cplx w(2.0, 1.0);
  const Matrix4cd s_mat = ref.U0 * w + ref.V0 * std::conj(w);
  Eigen::ComplexEigenSolver<Matrix4cd> eig(s_mat);
  const Eigen::Vector4d want = ref.exponents(w);
  Matrix4cd r = Matrix4cd::Zero();
  std::array<bool, 4> used{false, false, false, false};
  for (int col = 0; col < 4; ++col) {
    int best = -1;
    double best_err = 1e9;
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double err = std::abs(eig.eigenvalues()[j] - Cplx(want[col], 0.0));
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    used[best] = true;
    Eigen::Vector4cd v = eig.eigenvectors().col(best);
    v.normalize();
    // Phase-fix: first entry of modulus > 1e-8 made real positive.
    for (int i = 0; i < 4; ++i)
      if (std::abs(v[i]) > 1e-8) {
        v *= std::conj(v[i]) / std::abs(v[i]);
        break;
      }
    r.col(col) = v;
  }
  ref.R = r;
  ref.R_inv = r.adjoint();  // unitary
  return ref;
}

}  // namespace

const HorosphericalRef& horospherical_ref() {
  static const HorosphericalRef ref = build_ref();
  return ref;
}

Matrix4cd HorosphericalRef::frame(Cplx w) const {
  const Eigen::Vector4d d = exponents(w);
  Matrix4cd out = R;
  for (int i = 0; i < 4; ++i) out.col(i) *= std::exp(d[i]);
  return A0 * out * R_inv;
}

Matrix4cd HorosphericalRef::frame_inverse(Cplx w) const {
  const Eigen::Vector4d d = exponents(w);
  Matrix4cd out = R;
  for (int i = 0; i < 4; ++i) out.col(i) *= std::exp(-d[i]);
  return out * R_inv * A0_inv;
}

SplitVector4 horospherical_embedding(Cplx w) {
  const double x = 2.0 * w.real(), y = 2.0 * w.imag();
  const double s = 1.0 / std::sqrt(2.0);
  return SplitVector4(s * std::sinh(x), s * std::sinh(y), s * std::cosh(x),
                      s * std::cosh(y));
}

SplitVector4 horospherical_normal(Cplx w) {
  const double x = 2.0 * w.real(), y = 2.0 * w.imag();
  const double s = 1.0 / std::sqrt(2.0);
  return SplitVector4(s * std::sinh(x), -s * std::sinh(y), s * std::cosh(x),
                      -s * std::cosh(y));
}

HoroRayLimit horospherical_ray_limit(double theta, double tol) {
  HoroRayLimit out;
  const double t = wrap_two_pi(theta + kPi / 4.0);  // quadrant index below
  const double q = t / (kPi / 2.0);
  const double frac = q - std::floor(q);
  if (std::min(frac, 1.0 - frac) * (kPi / 2.0) <= tol) {
    out.on_diagonal = true;
    out.direction = SplitVector4::Zero();
    return out;
  }
  switch (static_cast<int>(std::floor(q)) % 4) {
    case 0: out.direction = SplitVector4(1, 0, 1, 0); break;
    case 1: out.direction = SplitVector4(0, 1, 0, 1); break;
    case 2: out.direction = SplitVector4(-1, 0, 1, 0); break;
    default: out.direction = SplitVector4(0, -1, 0, 1); break;
  }
  return out;
}

DiskModelPoint to_disk_model(const SplitVector4& sigma, double tol) {
  // relative test: the pairing of large representatives cancels at the scale
  // of the squared norm
  if (std::abs(bilinear_form(sigma, sigma) + 1.0) > tol * std::max(1.0, sigma.squaredNorm()))
    throw std::invalid_argument("to_disk_model: point is not on the quadric");
  const double rho = std::hypot(sigma[2], sigma[3]);  // >= 1 on the quadric
  DiskModelPoint p;
  const double z2 = (rho - 1.0) / (rho + 1.0);
  const double scale = 0.5 * (1.0 - z2);
  p.zx = sigma[0] * scale;
  p.zy = sigma[1] * scale;
  p.wx = sigma[2] / rho;
  p.wy = sigma[3] / rho;
  return p;
}

SplitVector4 from_disk_model(const DiskModelPoint& p) {
  const double z2 = p.zx * p.zx + p.zy * p.zy;
  const double a = 2.0 / (1.0 - z2);
  const double b = (1.0 + z2) / (1.0 - z2);
  return SplitVector4(a * p.zx, a * p.zy, b * p.wx, b * p.wy);
}

}  // namespace adsmax
