#pragma once

// Isometries of AdS3 as pairs of real Moebius transformations, their 4x4
// representation on R^{2,2}, and fixed-point machinery for hyperbolic
// elements.
//
// The identification of R^{2,2} with 2x2 real matrices is fixed once:
//     M(x) = [ x2 + x0   x3 + x1 ]
//            [ x1 - x3   x2 - x0 ],     det M(x) = -<x,x>.
// A pair (A, B) of unimodular matrices acts by M -> A M B^T. Null vectors
// are the rank-one matrices u v^T; the direction of u is the left Segre
// factor and the direction of v the right one, so A moves the left factor
// and B the right factor.

#include "adsmax/geometry.hpp"

#include <Eigen/Dense>

#include <array>

namespace adsmax {

// A real Moebius transformation of RP^1, kept as a unimodular 2x2 matrix.
class Mobius {
 public:
  Mobius() : m_(Eigen::Matrix2d::Identity()) {}
  // Normalises to det = 1. Throws std::invalid_argument when det <= 0
  // (orientation-reversing input is not part of PSL(2,R)).
  explicit Mobius(const Eigen::Matrix2d& m, double det_tol = 1e-12);

  const Eigen::Matrix2d& matrix() const { return m_; }

  // Projective action on an angle mod pi.
  double operator()(double angle) const;

  Eigen::Vector2d apply_dir(const Eigen::Vector2d& d) const { return m_ * d; }

  Mobius inverse() const;
  Mobius pow(int n) const;
  friend Mobius operator*(const Mobius& a, const Mobius& b) {
    return Mobius(a.m_ * b.m_);
  }

  double trace() const { return m_.trace(); }
  bool hyperbolic() const { return std::abs(trace()) > 2.0; }

  static Mobius identity() { return Mobius(); }
  static Mobius rotation(double angle);                 // angle mod pi on RP^1
  static Mobius diagonal(double lambda);                // diag(lambda, 1/lambda)
  // Unique orientation-preserving map with src[i] -> dst[i] for three
  // distinct projective angles. Throws when the triples have opposite
  // cyclic orientation.
  static Mobius from_three_angles(const std::array<double, 3>& src,
                                  const std::array<double, 3>& dst);

 private:
  Eigen::Matrix2d m_;
};

struct FixedPoints {
  double attracting = 0.0;  // projective angle mod pi
  double repelling = 0.0;
};

// Eigen-directions of a hyperbolic Moebius map, ordered by eigenvalue
// modulus. Throws std::invalid_argument when |tr| <= 2.
FixedPoints fixed_points(const Mobius& a);

struct IsometryPair {
  Mobius left;
  Mobius right;
  Eigen::Matrix4d rep4 = Eigen::Matrix4d::Identity();

  BoundaryPoint apply(const BoundaryPoint& p) const;
  SplitVector4 apply(const SplitVector4& x) const { return rep4 * x; }

  IsometryPair inverse() const;
  friend IsometryPair operator*(const IsometryPair& a, const IsometryPair& b);
};

// Builds the 4x4 representation of a pair of unimodular 2x2 matrices.
// Throws std::invalid_argument when either determinant differs from 1
// beyond tol (after Mobius normalisation this only rejects det <= 0).
IsometryPair isometry_from_pair(const Eigen::Matrix2d& left, const Eigen::Matrix2d& right,
                                double det_tol = 1e-9);
IsometryPair isometry_from_pair(const Mobius& left, const Mobius& right);

// ||G^T J G - J||_max; zero for exact elements of O(2,2).
double form_preservation_error(const Eigen::Matrix4d& g);

// The four boundary points assembled from attracting/repelling fixed points
// of the two factors of a hyperbolic pair.
struct LimitFixedPair {
  BoundaryPoint pp;  // (left attracting, right attracting)
  BoundaryPoint pm;
  BoundaryPoint mp;
  BoundaryPoint mm;
};
LimitFixedPair limit_fixed_pair(const IsometryPair& g);

// 2x2 <-> R^{2,2} matrix model helpers (exposed for tests).
Eigen::Matrix2d segre_mat(const SplitVector4& x);
SplitVector4 segre_unmat(const Eigen::Matrix2d& m);

}  // namespace adsmax
