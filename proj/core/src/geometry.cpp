#include "adsmax/geometry.hpp"

#include <cmath>

namespace adsmax {

double bilinear_form(const SplitVector4& x, const SplitVector4& y) {
  return x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

const Eigen::Matrix4d& split_form_matrix() {
  static const Eigen::Matrix4d J = [] {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
  }();
  return J;
}

std::complex<double> hermitian_form(const Eigen::Vector4cd& z, const Eigen::Vector4cd& w) {
  return z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]) - z[2] * std::conj(w[2]) -
         z[3] * std::conj(w[3]);
}

double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can land exactly on 2*pi after the correction when a is a tiny
  // negative number.
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double wrap_pm_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  if (r > kPi) r -= kTwoPi;
  return r;
}

double wrap_pi(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

double proj_angle_dist(double a, double b) {
  double d = wrap_pi(a - b);
  return std::min(d, kPi - d);
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::spacelike: return "spacelike";
    case CausalClass::lightlike: return "lightlike";
    case CausalClass::timelike: return "timelike";
  }
  return "?";
}

SplitVector4 torus_to_null(double theta, double theta_prime) {
  return SplitVector4(std::cos(theta), std::sin(theta), std::cos(theta_prime),
                      std::sin(theta_prime));
}

BoundaryPoint null_to_torus(const SplitVector4& x, double tol) {
  const double r1 = std::hypot(x[0], x[1]);
  const double r2 = std::hypot(x[2], x[3]);
  const double scale = std::max({r1 * r1, r2 * r2, 1.0});
  if (std::abs(bilinear_form(x, x)) > tol * scale)
    throw std::invalid_argument("null_to_torus: vector is not on the null cone");
  if (r1 <= tol || r2 <= tol)
    throw std::invalid_argument("null_to_torus: degenerate component pair");
  BoundaryPoint p;
  p.theta = wrap_two_pi(std::atan2(x[1], x[0]));
  p.theta_prime = wrap_two_pi(std::atan2(x[3], x[2]));
  p.null_rep = x / r1;
  return p;
}

BoundaryPoint boundary_point(double theta, double theta_prime) {
  BoundaryPoint p;
  p.theta = wrap_two_pi(theta);
  p.theta_prime = wrap_two_pi(theta_prime);
  p.null_rep = torus_to_null(p.theta, p.theta_prime);
  return p;
}

BoundaryPoint boundary_from_factors(double left, double right) {
  return boundary_point(right + left, right - left);
}

CausalClass causal_class(const BoundaryPoint& p, const BoundaryPoint& q, double tol) {
  const double d = std::abs(wrap_pm_pi(p.theta - q.theta));
  const double dp = std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime));
  if (d <= tol && dp <= tol)
    throw std::invalid_argument("causal_class: points coincide");
  if (std::abs(d - dp) <= tol) return CausalClass::lightlike;
  return d > dp ? CausalClass::spacelike : CausalClass::timelike;
}

double boundary_dist(const BoundaryPoint& p, const BoundaryPoint& q) {
  const double d1 = std::max(std::abs(wrap_pm_pi(p.theta - q.theta)),
                             std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime)));
  const double d2 = std::max(std::abs(wrap_pm_pi(p.theta - q.theta - kPi)),
                             std::abs(wrap_pm_pi(p.theta_prime - q.theta_prime - kPi)));
  return std::min(d1, d2);
}

}  // namespace adsmax
