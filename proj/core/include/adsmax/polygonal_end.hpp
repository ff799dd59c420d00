#pragma once

// Assembly and verification of the light-like polygonal end at a pole of
// order n: chains the n-2 per-chart "vees", identifies shared endpoints,
// extends equivariantly under the peripheral holonomy, and checks
// achronality and accumulation.

#include "adsmax/geometry.hpp"
#include "adsmax/isometry.hpp"

#include <Eigen/Dense>

#include <vector>

namespace adsmax {

struct PolygonalEnd {
  int pole_order = 3;
  IsometryPair holonomy;
  std::vector<BoundaryPoint> fundamental_vertices;  // 2(n-2)
  std::vector<char> foliation;  // per fundamental segment, alternating 'L','R'
  std::vector<BoundaryPoint> windowed_vertices;  // over m in [-window, window]
  std::vector<Eigen::Matrix4d> chart_limits;
  double max_join_defect = 0.0;  // shared-endpoint identification error
  int window = 2;

  // Dense samples of the windowed light-like segments.
  std::vector<BoundaryPoint> sample_segments(int per_segment) const;
};

struct AssembleOptions {
  double join_tol = 1e-6;
  int window = 2;
  bool check_achronal = true;
  int achronal_samples = 48;  // per window; pairwise scan
};

// Vee of chart k: L_k applied to (1,0,1,0) -- [1,s,1,s] -- (0,1,0,1) --
// [-s,1,s,1] -- (-1,0,1,0). Consecutive vees must share their extreme
// vertex, and the last must close onto the first through the holonomy.
// Throws std::invalid_argument on count mismatch, std::runtime_error on
// join-identification failure or achronality violation.
PolygonalEnd assemble_end(int pole_order, const IsometryPair& holonomy,
                          const std::vector<Eigen::Matrix4d>& chart_limits,
                          const AssembleOptions& opts = {});

// Scan helper: counts causal classes over all sampled point pairs.
struct AchronalScan {
  int timelike = 0, lightlike = 0, spacelike = 0;
  int pairs() const { return timelike + lightlike + spacelike; }
};
AchronalScan achronal_scan(const std::vector<BoundaryPoint>& pts);

}  // namespace adsmax
