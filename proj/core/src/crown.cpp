#include "adsmax/crown.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace adsmax {

namespace {

int floordiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Eigen::Vector2d dir_of(double angle) {
  return Eigen::Vector2d(std::cos(angle), std::sin(angle));
}

}  // namespace

ArcFrame arc_frame(const Mobius& m) {
  ArcFrame f;
  f.map = m;
  const FixedPoints fp = fixed_points(m);
  f.attracting = fp.attracting;
  f.repelling = fp.repelling;
  f.basis.col(0) = dir_of(f.attracting);
  f.basis.col(1) = dir_of(f.repelling);
  // Orient so that increasing s moves counterclockwise (det < 0).
  if (f.basis.determinant() > 0.0) f.basis.col(1) *= -1.0;
  f.basis_inv = f.basis.inverse();
  const double tr = std::abs(m.trace());
  const double lam = 0.5 * (tr + std::sqrt(tr * tr - 4.0));
  f.lambda2 = lam * lam;
  return f;
}

double ArcFrame::to_coord(double angle) const {
  const Eigen::Vector2d c = basis_inv * dir_of(angle);
  return c[0] / c[1];
}

double ArcFrame::from_coord(double s) const {
  const Eigen::Vector2d v = basis * Eigen::Vector2d(s, 1.0);
  return wrap_pi(std::atan2(v[1], v[0]));
}

void CrownEndData::validate() const {
  if (!left.hyperbolic() || !right.hyperbolic())
    throw std::invalid_argument("CrownEndData: both factors must be hyperbolic");
  if (theta_fund.empty() || theta_fund.size() != theta_prime_fund.size())
    throw std::invalid_argument("CrownEndData: angle lists must be nonempty and equal");
  auto check_list = [](const ArcFrame& f, const std::vector<double>& angles,
                       const char* side) {
    double sign = 0.0;
    double prev_u = 0.0;
    for (size_t i = 0; i < angles.size(); ++i) {
      const double s = f.to_coord(angles[i]);
      if (s == 0.0 || !std::isfinite(s))
        throw std::invalid_argument(std::string("CrownEndData: ") + side +
                                    " angle at a fixed point");
      const double sg = s > 0.0 ? 1.0 : -1.0;
      if (i == 0)
        sign = sg;
      else if (sg != sign)
        throw std::invalid_argument(std::string("CrownEndData: ") + side +
                                    " angles not in one arc");
      const double u = std::log(std::abs(s));
      if (i > 0 && !(u > prev_u))
        throw std::invalid_argument(std::string("CrownEndData: ") + side +
                                    " angles not strictly ordered");
      prev_u = u;
    }
    const double first_u = std::log(std::abs(f.to_coord(angles.front())));
    if (!(prev_u - first_u < f.period()))
      throw std::invalid_argument(std::string("CrownEndData: ") + side +
                                  " equivariant extension not ordered");
  };
  check_list(arc_frame(left), theta_fund, "left");
  check_list(arc_frame(right), theta_prime_fund, "right");
}

CompletionFunction CompletionFunction::build(const CrownEndData& data) {
  data.validate();
  CompletionFunction f;
  f.data_ = data;
  f.left_ = arc_frame(data.left);
  f.right_ = arc_frame(data.right);
  for (double a : data.theta_fund) {
    const double s = f.left_.to_coord(a);
    f.sign_ = s > 0.0 ? 1.0 : -1.0;
    f.u_.push_back(std::log(std::abs(s)));
  }
  for (double a : data.theta_prime_fund) {
    const double s = f.right_.to_coord(a);
    f.sign_p_ = s > 0.0 ? 1.0 : -1.0;
    f.up_.push_back(std::log(std::abs(s)));
  }
  return f;
}

CompletionFunction build_completion(const CrownEndData& data) {
  return CompletionFunction::build(data);
}

double CompletionFunction::theta(int i) const {
  const int kk = k();
  const int m = floordiv(i, kk);
  return data_.left.pow(m)(data_.theta_fund[i - m * kk]);
}

double CompletionFunction::theta_prime(int i) const {
  const int kk = k();
  const int m = floordiv(i, kk);
  return data_.right.pow(m)(data_.theta_prime_fund[i - m * kk]);
}

double CompletionFunction::theta_u(int i) const {
  const int kk = k();
  const int m = floordiv(i, kk);
  return u_[i - m * kk] + m * left_.period();
}

double CompletionFunction::theta_prime_u(int i) const {
  const int kk = k();
  const int m = floordiv(i, kk);
  return up_[i - m * kk] + m * right_.period();
}

double CompletionFunction::operator()(double angle) const {
  const double s = left_.to_coord(angle);
  if (!(s * sign_ > 0.0))
    throw std::domain_error("CompletionFunction: angle outside the completion arc");
  const double u = std::log(std::abs(s));
  const double p = left_.period();
  const int m = static_cast<int>(std::floor((u - u_[0] + 1e-12) / p));
  const double ub = u - m * p;
  int j = 0;
  for (int i = 1; i < k(); ++i)
    if (u_[i] <= ub + 1e-9) j = i;
  return data_.right.pow(m)(data_.theta_prime_fund[j]);
}

BoundaryPoint PolygonalCurve::sample(const BoundarySegmentSpec& seg, double t01) const {
  const double u = seg.u_from + t01 * (seg.u_to - seg.u_from);
  if (seg.foliation == 'L') {
    const double moving = right_arc.from_coord(right_sign * std::exp(u));
    return boundary_from_factors(seg.fixed_angle, moving);
  }
  const double moving = left_arc.from_coord(left_sign * std::exp(u));
  return boundary_from_factors(moving, seg.fixed_angle);
}

std::vector<BoundaryPoint> PolygonalCurve::sample_all(int per_segment) const {
  std::vector<BoundaryPoint> pts;
  pts.reserve(segments.size() * per_segment);
  for (const auto& seg : segments)
    for (int s = 0; s < per_segment; ++s)
      pts.push_back(sample(seg, double(s) / std::max(1, per_segment - 1)));
  return pts;
}

PolygonalCurve curve_from_completion(const CompletionFunction& f, int window) {
  PolygonalCurve curve;
  const int kk = f.k();
  curve.fundamental_count = 2 * kk;
  curve.window = window;
  curve.left_arc = f.left_arc();
  curve.right_arc = f.right_arc();
  curve.left_sign = f.left_arc().to_coord(f.theta(0)) > 0.0 ? 1.0 : -1.0;
  curve.right_sign = f.right_arc().to_coord(f.theta_prime(0)) > 0.0 ? 1.0 : -1.0;
  curve.holonomy = isometry_from_pair(f.data().left, f.data().right);

  const int i_lo = -window * kk;
  const int i_hi = window * kk + kk - 1;
  // Vertices W_{2i} = (theta_i, theta'_i), W_{2i+1} = (theta_{i+1}, theta'_i).
  for (int i = i_lo; i <= i_hi; ++i) {
    curve.vertices.push_back(boundary_from_factors(f.theta(i), f.theta_prime(i)));
    curve.vertices.push_back(boundary_from_factors(f.theta(i + 1), f.theta_prime(i)));
    BoundarySegmentSpec r;  // between the two: right factor fixed
    r.foliation = 'R';
    r.fixed_angle = f.theta_prime(i);
    r.u_from = f.theta_u(i);
    r.u_to = f.theta_u(i + 1);
    r.a = curve.vertices[curve.vertices.size() - 2];
    r.b = curve.vertices.back();
    if (i > i_lo) {
      BoundarySegmentSpec l;  // previous W_{2i-1} -> W_{2i}: left factor fixed
      l.foliation = 'L';
      l.fixed_angle = f.theta(i);
      l.u_from = f.theta_prime_u(i - 1);
      l.u_to = f.theta_prime_u(i);
      l.a = curve.vertices[curve.vertices.size() - 3];
      l.b = curve.vertices[curve.vertices.size() - 2];
      curve.segments.push_back(l);
    }
    curve.segments.push_back(r);
  }
  return curve;
}

CrownEndData relabel(const CrownEndData& data, int shift) {
  const CompletionFunction f = build_completion(data);
  CrownEndData out = data;
  const int kk = data.k();
  for (int i = 0; i < kk; ++i) {
    out.theta_fund[i] = f.theta(i + shift);
    out.theta_prime_fund[i] = f.theta_prime(i + shift);
  }
  out.label_offset = data.label_offset + shift;
  return out;
}

CrownEndData shift_theta_only(const CrownEndData& data, int shift) {
  const CompletionFunction f = build_completion(data);
  CrownEndData out = data;
  const int kk = data.k();
  for (int i = 0; i < kk; ++i) out.theta_fund[i] = f.theta(i + shift);
  return out;
}

double directed_hausdorff(const std::vector<BoundaryPoint>& from,
                          const std::vector<BoundaryPoint>& to) {
  double worst = 0.0;
  for (const auto& p : from) {
    double best = 1e300;
    for (const auto& q : to) best = std::min(best, boundary_dist(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

double curve_hausdorff(const PolygonalCurve& a, const PolygonalCurve& b,
                       int samples_per_segment) {
  auto core_samples = [&](const PolygonalCurve& c) {
    std::vector<BoundaryPoint> pts;
    const int skip = c.fundamental_count;  // drop one period at each end
    for (size_t s = skip; s + skip < c.segments.size(); ++s)
      for (int t = 0; t < samples_per_segment; ++t)
        pts.push_back(c.sample(c.segments[s], double(t) / (samples_per_segment - 1)));
    return pts;
  };
  auto all_samples = [&](const PolygonalCurve& c) { return c.sample_all(samples_per_segment); };
  const double d1 = directed_hausdorff(core_samples(a), all_samples(b));
  const double d2 = directed_hausdorff(core_samples(b), all_samples(a));
  return std::max(d1, d2);
}

void CrownParams::validate() const {
  if (!(boundary_length > 0.0))
    throw std::invalid_argument("CrownParams: boundary length must be positive");
  double sum = 0.0;
  for (double g : gaps) {
    if (!(g > 0.0)) throw std::invalid_argument("CrownParams: gaps must be positive");
    sum += g;
  }
  if (!(sum < boundary_length))
    throw std::invalid_argument("CrownParams: gaps must fit in one period");
}

CrownEndData crown_to_end_data(const CrownParams& left, const CrownParams& right) {
  left.validate();
  right.validate();
  if (left.cusps() != right.cusps())
    throw std::invalid_argument("crown_to_end_data: cusp counts differ");
  CrownEndData data;
  data.left = Mobius::diagonal(std::exp(0.5 * left.boundary_length));
  data.right = Mobius::diagonal(std::exp(0.5 * right.boundary_length));
  auto angles = [](const CrownParams& p) {
    std::vector<double> out;
    double xi = std::exp(p.twist);
    out.push_back(wrap_pi(std::atan2(1.0, -xi)));
    for (double g : p.gaps) {
      xi *= std::exp(g);
      out.push_back(wrap_pi(std::atan2(1.0, -xi)));
    }
    return out;
  };
  data.theta_fund = angles(left);
  data.theta_prime_fund = angles(right);
  data.validate();
  return data;
}

std::vector<IsometryPair> chart_limits_from_crown(const CrownEndData& data) {
  const CompletionFunction f = build_completion(data);
  const double quarter = kPi / 4.0, half = kPi / 2.0;
  const double ls = f.left_arc().to_coord(f.theta(0)) > 0.0 ? 1.0 : -1.0;
  const double rs = f.right_arc().to_coord(f.theta_prime(0)) > 0.0 ? 1.0 : -1.0;
  std::vector<IsometryPair> out;
  for (int c = 0; c < data.k(); ++c) {
    const double mid_l =
        f.left_arc().from_coord(ls * std::exp(0.5 * (f.theta_u(c) + f.theta_u(c + 1))));
    const double mid_r = f.right_arc().from_coord(
        rs * std::exp(0.5 * (f.theta_prime_u(c - 1) + f.theta_prime_u(c))));
    const Mobius lam_l = Mobius::from_three_angles({0.0, quarter, half},
                                                   {f.theta(c), mid_l, f.theta(c + 1)});
    const Mobius lam_r = Mobius::from_three_angles(
        {0.0, quarter, half}, {f.theta_prime(c - 1), mid_r, f.theta_prime(c)});
    out.push_back(isometry_from_pair(lam_l, lam_r));
  }
  return out;
}

SyntheticEnd synthetic_end(int pole_order, std::uint64_t seed) {
  if (pole_order < 3)
    throw std::invalid_argument("synthetic_end: pole order must be >= 3");
  const int k = pole_order - 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto random_hyperbolic = [&]() {
    const double len = 0.9 + 1.0 * unit(rng);  // translation length
    const Mobius c = Mobius::rotation(kPi * unit(rng)) *
                     Mobius::diagonal(std::exp(0.8 * (unit(rng) - 0.5))) *
                     Mobius::rotation(kPi * unit(rng));
    return c * Mobius::diagonal(std::exp(0.5 * len)) * c.inverse();
  };
  auto place_cusps = [&](const ArcFrame& frame) {
    std::vector<double> angles;
    const double p = frame.period();
    for (int j = 0; j < k; ++j) {
      const double jitter = 0.45 * (2.0 * unit(rng) - 1.0);
      const double u = p * (0.08 + 0.8 * (j + 0.5 + jitter) / k);
      angles.push_back(frame.from_coord(std::exp(u)));
    }
    return angles;
  };

  SyntheticEnd out;
  out.data.left = random_hyperbolic();
  out.data.right = random_hyperbolic();
  out.data.theta_fund = place_cusps(arc_frame(out.data.left));
  out.data.theta_prime_fund = place_cusps(arc_frame(out.data.right));
  out.data.validate();
  out.holonomy = isometry_from_pair(out.data.left, out.data.right);
  out.chart_isometries = chart_limits_from_crown(out.data);
  return out;
}

}  // namespace adsmax
