#include "adsmax/osculating.hpp"

#include "adsmax/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace adsmax {

namespace {

// Positions that vanish identically in R^{-1} Theta R; conjugating them by
// the diagonal exponential would otherwise amplify round-off beyond range.
constexpr bool kZeroPattern[4][4] = {
    {false, false, true, false},
    {false, false, false, true},
    {true, false, false, false},
    {false, true, false, false},
};

// F0 Theta F0^{-1} with the inner conjugation by diag(e^{d_i}) done
// entrywise as exp(d_i - d_j + log |m|) to avoid overflow and cancellation.
Matrix4cd stabilized_conjugation(const HorosphericalRef& ref, const Matrix4cd& theta,
                                 Cplx w) {
  const Matrix4cd inner = ref.R_inv * theta * ref.R;
  const Eigen::Vector4d d = ref.exponents(w);
  Matrix4cd scaled;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Cplx m = inner(i, j);
      const double am = std::abs(m);
      if (kZeroPattern[i][j] || am == 0.0) {
        scaled(i, j) = Cplx(0.0, 0.0);
        continue;
      }
      const double logmag = d[i] - d[j] + std::log(am);
      scaled(i, j) = (logmag < -700.0) ? Cplx(0.0, 0.0) : std::exp(logmag) * (m / am);
    }
  return ref.A0 * ref.R * scaled * ref.R_inv * ref.A0_inv;
}

Matrix4cd theta_matrix(const ConnectionSource& src, Cplx w, Cplx wdot) {
  const ConnectionSample full = connection_at(src.jet(w), src.q(w));
  const ConnectionSample horo = connection_at(PhiJet{}, Cplx(1.0, 0.0));
  return (full.U - horo.U) * wdot + (full.V - horo.V) * std::conj(wdot);
}

// One RK4 step of G' = G Xi(t) along a straight leg w(t) = w0 + dir * t.
Matrix4cd xi_at(const HorosphericalRef& ref, const ConnectionSource& src, Cplx w,
                Cplx dir) {
  return stabilized_conjugation(ref, theta_matrix(src, w, dir), w);
}

void integrate_leg(const HorosphericalRef& ref, const ConnectionSource& src, Matrix4cd& G,
                   Cplx a, Cplx b, double step) {
  const double len = std::abs(b - a);
  if (len == 0.0) return;
  const Cplx dir = (b - a) / len;
  const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
  const double h = len / n;
  for (int k = 0; k < n; ++k) {
    const Cplx w0 = a + dir * (h * k);
    const Matrix4cd k1 = G * xi_at(ref, src, w0, dir);
    const Matrix4cd k2 = (G + 0.5 * h * k1) * xi_at(ref, src, w0 + 0.5 * h * dir, dir);
    const Matrix4cd k3 = (G + 0.5 * h * k2) * xi_at(ref, src, w0 + 0.5 * h * dir, dir);
    const Matrix4cd k4 = (G + h * k3) * xi_at(ref, src, w0 + h * dir, dir);
    G += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

}  // namespace

Eigen::Matrix4d osculate(const Matrix4cd& F, Cplx w, double tol) {
  const HorosphericalRef& ref = horospherical_ref();
  // (F R) D^{-1} (R^{-1} A0^{-1}): the column rescaling cancels the stiff
  // exponents before any mixing happens.
  Matrix4cd fr = F * ref.R;
  const Eigen::Vector4d d = ref.exponents(w);
  for (int i = 0; i < 4; ++i) fr.col(i) *= std::exp(-d[i]);
  const Matrix4cd g = fr * ref.R_inv * ref.A0_inv;
  const double imag = g.imag().cwiseAbs().maxCoeff();
  if (imag > tol)
    throw std::runtime_error("osculate: imaginary part beyond tolerance");
  Eigen::Matrix4d out = g.real();
  if (form_preservation_error(out) > tol)
    throw std::runtime_error("osculate: (2,2)-form preservation violated");
  return out;
}

const char* to_string(RayInterval j) {
  switch (j) {
    case RayInterval::J_plus: return "J+";
    case RayInterval::J_zero: return "J0";
    case RayInterval::J_minus: return "J-";
  }
  return "?";
}

RayInterval ray_interval(double theta, double guard) {
  if (!(theta > 0.0 && theta < kPi))
    throw std::invalid_argument("ray_interval: direction must lie in (0, pi)");
  if (std::abs(theta - kPi / 4.0) <= guard || std::abs(theta - 3.0 * kPi / 4.0) <= guard)
    throw std::invalid_argument("ray_interval: unstable direction");
  if (theta < kPi / 4.0) return RayInterval::J_plus;
  if (theta < 3.0 * kPi / 4.0) return RayInterval::J_zero;
  return RayInterval::J_minus;
}

OsculatingLimit ray_limit(double theta, double y, const ConnectionSource& src,
                          const RayLimitOptions& opts) {
  OsculatingLimit out;
  out.interval = ray_interval(theta);
  const HorosphericalRef& ref = horospherical_ref();
  const Cplx dir(std::cos(theta), std::sin(theta));
  const Cplx start(0.0, y);

  Matrix4cd G = Matrix4cd::Identity();  // lift: F = F0 at the anchor
  integrate_leg(ref, src, G, Cplx(0.0, opts.y_anchor), start, opts.ode_step);

  double t_prev = 0.0;
  double t_next = opts.t0;
  Eigen::Matrix4d prev = Eigen::Matrix4d::Zero();
  bool have_prev = false;
  while (t_next <= opts.t_max) {
    integrate_leg(ref, src, G, start + dir * t_prev, start + dir * t_next, opts.ode_step);
    const Eigen::Matrix4d now = G.real();
    if (have_prev) {
      out.cauchy_gap = (now - prev).cwiseAbs().maxCoeff();
      if (out.cauchy_gap < opts.cauchy_tol) {
        out.converged = true;
        out.L = now;
        out.t_final = t_next;
        out.form_error = form_preservation_error(out.L);
        return out;
      }
    }
    prev = now;
    have_prev = true;
    t_prev = t_next;
    t_next *= opts.ratio;
  }
  out.L = prev;
  out.t_final = t_prev;
  out.form_error = form_preservation_error(out.L);
  return out;  // converged = false; cauchy_gap reports the last increment
}

UnipotentFactor unipotent_factor(const Eigen::Matrix4d& L_a, const Eigen::Matrix4d& L_b,
                                 TransitionSide side) {
  const HorosphericalRef& ref = horospherical_ref();
  const Matrix4cd prod = (L_a.inverse() * L_b).cast<Cplx>();
  const Matrix4cd x = ref.R_inv * ref.A0_inv * prod * ref.A0 * ref.R;
  UnipotentFactor out;
  out.imag_mass = x.imag().cwiseAbs().maxCoeff();
  out.X = x.real();
  const int r1 = (side == TransitionSide::plus) ? 0 : 1;
  const int c1 = (side == TransitionSide::plus) ? 3 : 0;
  const int r2 = (side == TransitionSide::plus) ? 1 : 2;
  const int c2 = (side == TransitionSide::plus) ? 2 : 3;
  out.mu = 0.5 * (out.X(r1, c1) + out.X(r2, c2));
  Eigen::Matrix4d model = Eigen::Matrix4d::Identity();
  model(r1, c1) = out.mu;
  model(r2, c2) = out.mu;
  out.residual = (out.X - model).cwiseAbs().maxCoeff() + out.imag_mass;
  return out;
}

SplitVector4 interval_direction(RayInterval interval) {
  switch (interval) {
    case RayInterval::J_plus: return SplitVector4(1, 0, 1, 0);
    case RayInterval::J_zero: return SplitVector4(0, 1, 0, 1);
    case RayInterval::J_minus: return SplitVector4(-1, 0, 1, 0);
  }
  return SplitVector4::Zero();
}

BoundaryPoint limit_point(const Eigen::Matrix4d& L, RayInterval interval, double tol) {
  const SplitVector4 image = L * interval_direction(interval);
  return null_to_torus(image, tol);
}

}  // namespace adsmax
