#pragma once

// The horospherical maximal surface: the explicit frame field for the
// constant differential q = dw^2 and flat conformal factor, its constant
// unitary diagonaliser, and conversions between the quadric and the
// disc-times-circle model of AdS3.

#include "adsmax/connection.hpp"
#include "adsmax/geometry.hpp"

#include <Eigen/Dense>

namespace adsmax {

// Constant reference data:
//   U0, V0   the connection coefficients at phi = 0, q = 1 (U0 V0 = V0 U0 = I);
//   A0       the fixed frame normalisation;
//   R        constant unitary with R^{-1}(U0 w + V0 wbar) R =
//            diag(2 Re w, 2 Im w, -2 Re w, -2 Im w).
// R is computed once by eigendecomposition at a generic point with distinct
// eigenvalues (w = 2 + i), columns normalised and phase-fixed so the first
// nonzero entry is real positive, then validated against the diagonalisation
// identity.
struct HorosphericalRef {
  Matrix4cd U0, V0, A0, A0_inv, R, R_inv;

  Eigen::Vector4d exponents(Cplx w) const {
    return Eigen::Vector4d(2.0 * w.real(), 2.0 * w.imag(), -2.0 * w.real(),
                           -2.0 * w.imag());
  }
  Matrix4cd frame(Cplx w) const;          // F0(w) = A0 R diag(e^{d_i}) R^{-1}
  Matrix4cd frame_inverse(Cplx w) const;  // R diag(e^{-d_i}) R^{-1} A0^{-1}
};

const HorosphericalRef& horospherical_ref();

// sigma0(w) = (sinh 2Re w, sinh 2Im w, cosh 2Re w, cosh 2Im w) / sqrt(2),
// the last frame column; lies on the quadric <x,x> = -1.
SplitVector4 horospherical_embedding(Cplx w);

// Unit normal of the horospherical surface (third frame column).
SplitVector4 horospherical_normal(Cplx w);

// Projective limit direction of sigma0 along rays of direction theta: the
// four open quadrants between the diagonals give (1,0,1,0), (0,1,0,1),
// (-1,0,1,0), (0,-1,0,1); exactly on a diagonal the limit lies on a
// light-like segment such as [1,s,1,s], s > 0, depending on the offset.
// Returns the open-quadrant direction; theta on a diagonal (within tol) is
// reported via on_diagonal.
struct HoroRayLimit {
  SplitVector4 direction;
  bool on_diagonal = false;
};
HoroRayLimit horospherical_ray_limit(double theta, double tol = 1e-12);

// Inverse of the embedding F(z, v) = (2 z /(1-|z|^2), (1+|z|^2)/(1-|z|^2) v):
// disc point z and circle point v with F(z, v) = x. Requires <x,x> = -1.
struct DiskModelPoint {
  double zx = 0.0, zy = 0.0;  // |z| < 1
  double wx = 1.0, wy = 0.0;  // unit circle factor
};
DiskModelPoint to_disk_model(const SplitVector4& sigma, double tol = 1e-7);
SplitVector4 from_disk_model(const DiskModelPoint& p);

}  // namespace adsmax
