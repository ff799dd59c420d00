#pragma once

// Boundary curves from crown-end data: the completion function whose graph
// closes the limit set of a hyperbolic pair across one end, the polygonal
// boundary curve it traces on the torus, relabelling, and the synthetic
// chart-limit generator shared with the end-assembly pipeline.
//
// Orientation convention: on each factor the cusp angles are ordered along
// the arc from the repelling to the attracting fixed point, traversed
// counterclockwise (increasing arc coordinate).

#include "adsmax/geometry.hpp"
#include "adsmax/isometry.hpp"

#include <cstdint>
#include <vector>

namespace adsmax {

// Arc coordinates adapted to a hyperbolic Moebius map: s > 0 parameterises
// the counterclockwise arc from the repelling to the attracting fixed point,
// and the map acts by s -> lambda2 * s.
struct ArcFrame {
  Mobius map;
  double attracting = 0.0, repelling = 0.0;
  Eigen::Matrix2d basis;      // columns: attracting / repelling directions
  Eigen::Matrix2d basis_inv;
  double lambda2 = 1.0;

  double to_coord(double angle) const;   // signed; positive on the ccw arc
  double from_coord(double s) const;
  double period() const { return std::log(lambda2); }  // shift of log|s| under map
};
ArcFrame arc_frame(const Mobius& m);

struct CrownEndData {
  Mobius left, right;                    // hyperbolic peripheral pair
  std::vector<double> theta_fund;        // k cusp angles (mod pi), left factor
  std::vector<double> theta_prime_fund;  // k cusp angles, right factor
  int label_offset = 0;

  int k() const { return static_cast<int>(theta_fund.size()); }
  // Hyperbolicity, equal list sizes, one-arc placement, strict ordering, and
  // ordered equivariant extension. Throws std::invalid_argument.
  void validate() const;
};

// The completion function f of one end: a monotone step map on the arc
// between the fixed points of `left`, with f(theta_i) = theta'_i, constant
// theta'_i on [theta_i, theta_{i+1}), extended equivariantly by
// f(left(x)) = right(f(x)).
class CompletionFunction {
 public:
  static CompletionFunction build(const CrownEndData& data);

  // Evaluation at an angle strictly inside the completion arc.
  double operator()(double angle) const;

  const CrownEndData& data() const { return data_; }
  const ArcFrame& left_arc() const { return left_; }
  const ArcFrame& right_arc() const { return right_; }
  int k() const { return data_.k(); }

  // Equivariant cusp angles for any integer index (0-based fundamental list).
  double theta(int i) const;
  double theta_prime(int i) const;
  double theta_u(int i) const;        // arc coordinate log(s) of theta(i)
  double theta_prime_u(int i) const;

 private:
  CrownEndData data_;
  ArcFrame left_, right_;
  std::vector<double> u_;        // log arc coordinates of theta_fund
  std::vector<double> up_;       // of theta_prime_fund
  double sign_ = 1.0, sign_p_ = 1.0;  // arc signs of the two datasets
};

CompletionFunction build_completion(const CrownEndData& data);

struct BoundarySegmentSpec {
  char foliation = 'L';   // 'L': left factor constant; 'R': right constant
  double fixed_angle = 0.0;
  double u_from = 0.0, u_to = 0.0;  // moving factor log-arc coordinates
  BoundaryPoint a, b;
};

struct PolygonalCurve {
  std::vector<BoundaryPoint> vertices;
  std::vector<BoundarySegmentSpec> segments;
  IsometryPair holonomy;
  int fundamental_count = 0;  // 2k vertices per holonomy period
  int window = 2;
  ArcFrame left_arc, right_arc;
  double left_sign = 1.0, right_sign = 1.0;  // arc signs of the cusp data

  BoundaryPoint sample(const BoundarySegmentSpec& seg, double t01) const;
  std::vector<BoundaryPoint> sample_all(int per_segment) const;
};

// The graph of the completion function over m in [-window, window]:
// 'L' segments at the jump angles, 'R' segments along the plateaus.
PolygonalCurve curve_from_completion(const CompletionFunction& f, int window = 2);

// Diagonal relabelling: cyclic index shift applied to both angle lists,
// wrapping through the holonomy action.
CrownEndData relabel(const CrownEndData& data, int shift);
// Non-diagonal shift of the left list only (produces a genuinely different
// curve; kept for negative controls).
CrownEndData shift_theta_only(const CrownEndData& data, int shift);

double directed_hausdorff(const std::vector<BoundaryPoint>& from,
                          const std::vector<BoundaryPoint>& to);
// max of the two directed distances between sampled point sets, with the
// target curve sampled over a window enlarged by one period on each side so
// windowing effects cancel for equivalent curves.
double curve_hausdorff(const PolygonalCurve& a, const PolygonalCurve& b,
                       int samples_per_segment = 20);

// Teichmueller-style parameters of one crown: boundary length of the closed
// geodesic, the boundary twist, and the m-1 successive foot-point gaps of
// the cusp rays along the axis.
struct CrownParams {
  double boundary_length = 1.0;
  double twist = 0.0;
  std::vector<double> gaps;  // positive, sum < boundary_length

  int cusps() const { return static_cast<int>(gaps.size()) + 1; }
  void validate() const;
};

// Lifts a pair of crowns (same cusp count) to end data with diagonal
// holonomy; the cusp ideal points are placed on the axis side giving the
// counterclockwise orientation.
CrownEndData crown_to_end_data(const CrownParams& left, const CrownParams& right);

// Per-chart boundary isometries reproducing the curve's vees:
// the k-th maps the model vee vertices (1,0,1,0), (0,1,0,1), (-1,0,1,0) to
// the data's vertices (theta_k, theta'_{k-1}), (theta_k, theta'_k),
// (theta_{k+1}, theta'_k). Indices are 0-based: k = 0 .. n-3.
std::vector<IsometryPair> chart_limits_from_crown(const CrownEndData& data);

struct SyntheticEnd {
  CrownEndData data;
  IsometryPair holonomy;
  std::vector<IsometryPair> chart_isometries;
};

// Random-but-valid end data for a pole of the given order: hyperbolic factor
// pair with translation lengths in [0.9, 1.9], cusp angles spread over one
// fundamental period. Deterministic in the seed.
SyntheticEnd synthetic_end(int pole_order, std::uint64_t seed);

}  // namespace adsmax
