#pragma once

// Signature-(2,2) linear algebra, the quadric model of anti-de Sitter 3-space
// and its boundary torus.
//
// Conventions used throughout the library:
//   * the bilinear form is  <x,y> = x0 y0 + x1 y1 - x2 y2 - x3 y3;
//   * the quadric <x,x> = -1 carries the AdS3 metric, its projectivised
//     null cone is the boundary at infinity;
//   * boundary rays are parameterised by torus angles (theta, theta') via
//     x = (cos theta, sin theta, cos theta', sin theta');
//   * the Segre factors of a boundary ray are the projective angles
//         left  = (theta - theta') / 2   (mod pi)
//         right = (theta + theta') / 2   (mod pi).
//     Leaves with constant left factor run along the (+1,+1) direction of
//     the (theta, theta') square and form the left foliation; leaves with
//     constant right factor run along (+1,-1) and form the right foliation.
//     An isometry pair (A, B) moves the left factor by A and the right
//     factor by B.

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>

namespace adsmax {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Default tolerance for quadric / null-cone membership tests.
inline constexpr double kQuadricTol = 1e-9;

using SplitVector4 = Eigen::Vector4d;

// <x,y> = x0 y0 + x1 y1 - x2 y2 - x3 y3
double bilinear_form(const SplitVector4& x, const SplitVector4& y);

// J = diag(1, 1, -1, -1); both the real bilinear form and the Hermitian
// extension to C^4 are represented by this matrix.
const Eigen::Matrix4d& split_form_matrix();

// Hermitian extension <z,w> = z0 conj(w0) + z1 conj(w1) - z2 conj(w2) - z3 conj(w3).
std::complex<double> hermitian_form(const Eigen::Vector4cd& z, const Eigen::Vector4cd& w);

// Angle reduction helpers.
double wrap_two_pi(double a);  // -> [0, 2*pi)
double wrap_pm_pi(double a);   // -> (-pi, pi]
double wrap_pi(double a);      // -> [0, pi), for projective angles

// Distance between projective angles (mod pi).
double proj_angle_dist(double a, double b);

enum class CausalClass { spacelike, lightlike, timelike };

const char* to_string(CausalClass c);

// A point of the boundary at infinity, carried both as torus angles and as a
// null representative (the ray through null_rep is the actual datum; the
// angles select the representative with positive scale).
struct BoundaryPoint {
  double theta = 0.0;        // in [0, 2*pi)
  double theta_prime = 0.0;  // in [0, 2*pi)
  SplitVector4 null_rep = SplitVector4::Zero();

  double left_angle() const { return wrap_pi(0.5 * (theta - theta_prime)); }
  double right_angle() const { return wrap_pi(0.5 * (theta + theta_prime)); }
};

// (cos theta, sin theta, cos theta', sin theta')
SplitVector4 torus_to_null(double theta, double theta_prime);

// Recovers torus angles from a null vector. Positive multiples of a torus
// representative reproduce the angles exactly; negative multiples give the
// antipodal pair (theta+pi, theta'+pi), the same projective point.
// Throws std::invalid_argument when x is not null within tol or one of the
// component pairs (x0,x1), (x2,x3) vanishes.
BoundaryPoint null_to_torus(const SplitVector4& x, double tol = kQuadricTol);

BoundaryPoint boundary_point(double theta, double theta_prime);

// Boundary point with prescribed Segre factor angles (each mod pi).
BoundaryPoint boundary_from_factors(double left, double right);

// Causal class of a pair of distinct boundary points: with wrapped
// differences delta = theta_p - theta_q, delta' = theta'_p - theta'_q in
// (-pi, pi], the pair is lightlike iff |delta| = |delta'| (within tol),
// spacelike iff |delta| > |delta'|, timelike otherwise.
// Throws std::invalid_argument when p == q (both angle differences below tol).
CausalClass causal_class(const BoundaryPoint& p, const BoundaryPoint& q,
                         double tol = kQuadricTol);

// max of wrapped |dtheta|, |dtheta'| over the two antipodal representatives;
// a metric on the projective boundary.
double boundary_dist(const BoundaryPoint& p, const BoundaryPoint& q);

}  // namespace adsmax
