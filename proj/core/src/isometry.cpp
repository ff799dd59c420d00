#include "adsmax/isometry.hpp"

#include <cmath>

namespace adsmax {

Mobius::Mobius(const Eigen::Matrix2d& m, double det_tol) {
  const double det = m.determinant();
  if (det <= det_tol)
    throw std::invalid_argument("Mobius: determinant must be positive");
  m_ = m / std::sqrt(det);
}

double Mobius::operator()(double angle) const {
  const Eigen::Vector2d d = m_ * Eigen::Vector2d(std::cos(angle), std::sin(angle));
  return wrap_pi(std::atan2(d[1], d[0]));
}

Mobius Mobius::inverse() const {
  Eigen::Matrix2d inv;
  inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  Mobius r;
  r.m_ = inv;  // det already 1
  return r;
}

Mobius Mobius::pow(int n) const {
  Mobius base = n >= 0 ? *this : inverse();
  int e = n >= 0 ? n : -n;
  Mobius acc;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mobius Mobius::rotation(double angle) {
  Eigen::Matrix2d m;
  m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return Mobius(m);
}

Mobius Mobius::diagonal(double lambda) {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = lambda;
  m(1, 1) = 1.0 / lambda;
  return Mobius(m);
}

Mobius Mobius::from_three_angles(const std::array<double, 3>& src,
                                 const std::array<double, 3>& dst) {
  // N(p1,p2,p3) maps [1:0], [0:1], [1:1] to the three given directions;
  // the wanted map is N(dst) N(src)^{-1}.
  auto basis = [](const std::array<double, 3>& p) {
    Eigen::Vector2d u1(std::cos(p[0]), std::sin(p[0]));
    Eigen::Vector2d u2(std::cos(p[1]), std::sin(p[1]));
    Eigen::Vector2d u3(std::cos(p[2]), std::sin(p[2]));
    Eigen::Matrix2d m;
    m.col(0) = u1;
    m.col(1) = u2;
    const Eigen::Vector2d c = m.colPivHouseholderQr().solve(u3);
    if (std::abs(c[0]) < 1e-14 || std::abs(c[1]) < 1e-14)
      throw std::invalid_argument("Mobius::from_three_angles: points not distinct");
    Eigen::Matrix2d n;
    n.col(0) = c[0] * u1;
    n.col(1) = c[1] * u2;
    return n;
  };
  const Eigen::Matrix2d ns = basis(src);
  const Eigen::Matrix2d nd = basis(dst);
  const Eigen::Matrix2d m = nd * ns.inverse();
  if (m.determinant() <= 0.0)
    throw std::invalid_argument(
        "Mobius::from_three_angles: triples have opposite cyclic orientation");
  return Mobius(m);
}

FixedPoints fixed_points(const Mobius& a) {
  if (!a.hyperbolic())
    throw std::invalid_argument("fixed_points: |trace| <= 2, element not hyperbolic");
  const Eigen::Matrix2d& m = a.matrix();
  const double tr = m.trace();
  const double disc = std::sqrt(tr * tr - 4.0);
  const double l1 = 0.5 * (tr + disc);   // with det = 1: l1 * l2 = 1
  const double l2 = 0.5 * (tr - disc);
  auto eig_dir = [&](double lambda) {
    // (m - lambda I) v = 0; pick the more stable row.
    const double a11 = m(0, 0) - lambda, a22 = m(1, 1) - lambda;
    Eigen::Vector2d v;
    if (std::abs(a11) + std::abs(m(0, 1)) > std::abs(m(1, 0)) + std::abs(a22))
      v = Eigen::Vector2d(-m(0, 1), a11);
    else
      v = Eigen::Vector2d(a22, -m(1, 0));
    return wrap_pi(std::atan2(v[1], v[0]));
  };
  FixedPoints fp;
  if (std::abs(l1) > std::abs(l2)) {
    fp.attracting = eig_dir(l1);
    fp.repelling = eig_dir(l2);
  } else {
    fp.attracting = eig_dir(l2);
    fp.repelling = eig_dir(l1);
  }
  return fp;
}

Eigen::Matrix2d segre_mat(const SplitVector4& x) {
  Eigen::Matrix2d m;
  m << x[2] + x[0], x[3] + x[1], x[1] - x[3], x[2] - x[0];
  return m;
}

SplitVector4 segre_unmat(const Eigen::Matrix2d& m) {
  return SplitVector4(0.5 * (m(0, 0) - m(1, 1)), 0.5 * (m(0, 1) + m(1, 0)),
                      0.5 * (m(0, 0) + m(1, 1)), 0.5 * (m(0, 1) - m(1, 0)));
}

IsometryPair isometry_from_pair(const Eigen::Matrix2d& left, const Eigen::Matrix2d& right,
                                double det_tol) {
  if (std::abs(left.determinant() - 1.0) > det_tol ||
      std::abs(right.determinant() - 1.0) > det_tol)
    throw std::invalid_argument("isometry_from_pair: factors must be unimodular");
  return isometry_from_pair(Mobius(left), Mobius(right));
}

IsometryPair isometry_from_pair(const Mobius& left, const Mobius& right) {
  IsometryPair g;
  g.left = left;
  g.right = right;
  const Eigen::Matrix2d bt = right.matrix().transpose();
  for (int i = 0; i < 4; ++i) {
    SplitVector4 e = SplitVector4::Zero();
    e[i] = 1.0;
    g.rep4.col(i) = segre_unmat(left.matrix() * segre_mat(e) * bt);
  }
  return g;
}

BoundaryPoint IsometryPair::apply(const BoundaryPoint& p) const {
  return null_to_torus(rep4 * p.null_rep);
}

IsometryPair IsometryPair::inverse() const {
  return isometry_from_pair(left.inverse(), right.inverse());
}

IsometryPair operator*(const IsometryPair& a, const IsometryPair& b) {
  return isometry_from_pair(a.left * b.left, a.right * b.right);
}

double form_preservation_error(const Eigen::Matrix4d& g) {
  const Eigen::Matrix4d& J = split_form_matrix();
  return (g.transpose() * J * g - J).cwiseAbs().maxCoeff();
}

LimitFixedPair limit_fixed_pair(const IsometryPair& g) {
  const FixedPoints fl = fixed_points(g.left);
  const FixedPoints fr = fixed_points(g.right);
  LimitFixedPair out;
  out.pp = boundary_from_factors(fl.attracting, fr.attracting);
  out.pm = boundary_from_factors(fl.attracting, fr.repelling);
  out.mp = boundary_from_factors(fl.repelling, fr.attracting);
  out.mm = boundary_from_factors(fl.repelling, fr.repelling);
  return out;
}

}  // namespace adsmax
