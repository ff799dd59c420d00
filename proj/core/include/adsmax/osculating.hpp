#pragma once

// The osculating map G = F F0^{-1} comparing a frame field to the
// horospherical one, its limits along stable rays, and the unipotent
// transition factors across the two unstable directions.
//
// Ray limits are computed by integrating the osculating ODE
//     G'(t) = G . F0 Theta(gamma'(t)) F0^{-1}
// with the conjugation by the diagonal exponential factor of F0 performed
// entrywise in log space. This keeps every entry of the integrand in the
// representable range along the whole ray; extracting G from raw frame
// values F(t) instead loses all significant digits once the spread of the
// exponents exceeds ~25.

#include "adsmax/connection.hpp"
#include "adsmax/geometry.hpp"
#include "adsmax/horospherical.hpp"

#include <optional>

namespace adsmax {

// G(w) = F F0(w)^{-1}, using the closed-form inverse of F0 (negated
// exponents; no numerical inversion). Returns the real part after checking
// the imaginary part and the (2,2)-form preservation against tol; throws
// std::runtime_error beyond it.
Eigen::Matrix4d osculate(const Matrix4cd& F, Cplx w, double tol = 1e-6);

enum class RayInterval { J_plus, J_zero, J_minus };
const char* to_string(RayInterval j);

// Interval of a stable direction theta in (0, pi); throws
// std::invalid_argument within `guard` of the unstable directions pi/4,
// 3 pi/4 or outside (0, pi).
RayInterval ray_interval(double theta, double guard = 1e-6);

struct OsculatingLimit {
  RayInterval interval = RayInterval::J_plus;
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  double cauchy_gap = 0.0;   // last geometric-sequence increment
  double t_final = 0.0;
  bool converged = false;
  double form_error = 0.0;   // ||L^T J L - J||_max
};

struct RayLimitOptions {
  double y_anchor = 1.0;   // common lift anchor at w = i y_anchor
  double t0 = 1.0;         // first checkpoint
  double ratio = 1.5;      // geometric checkpoint ratio
  double cauchy_tol = 1e-6;
  double t_max = 400.0;
  double ode_step = 2e-3;
};

// Limit of G along gamma(t) = e^{i theta} t + i y. The frame lift is fixed
// by F = F0 at the anchor; the path runs from the anchor vertically to i y
// and then along the ray. Evaluation stops when consecutive geometric
// checkpoints differ by less than cauchy_tol in max norm.
OsculatingLimit ray_limit(double theta, double y, const ConnectionSource& src,
                          const RayLimitOptions& opts = {});

enum class TransitionSide { plus, minus };

struct UnipotentFactor {
  double mu = 0.0;
  double residual = 0.0;           // off-pattern mass of X - (I + mu N)
  Eigen::Matrix4d X;               // R^{-1} A0^{-1} (L_a^{-1} L_b) A0 R, real part
  double imag_mass = 0.0;          // largest imaginary part of X
};

// X = R^{-1} A0^{-1} (L_a^{-1} L_b) A0 R fitted against I + mu (E14 + E23)
// (side plus) or I + mu (E21 + E34) (side minus).
UnipotentFactor unipotent_factor(const Eigen::Matrix4d& L_a, const Eigen::Matrix4d& L_b,
                                 TransitionSide side);

// Projective boundary limit L v with v = (1,0,1,0), (0,1,0,1), (-1,0,1,0)
// for J_plus, J_zero, J_minus. Throws when the image is not null within tol.
BoundaryPoint limit_point(const Eigen::Matrix4d& L, RayInterval interval,
                          double tol = 1e-6);

// The tabulated null direction of each interval.
SplitVector4 interval_direction(RayInterval interval);

}  // namespace adsmax
