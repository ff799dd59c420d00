#include "adsmax/polygonal_end.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adsmax {

namespace {

// Points of the model vee in half-plane order.
const SplitVector4 kVeeA(1, 0, 1, 0);
const SplitVector4 kVeeM(0, 1, 0, 1);
const SplitVector4 kVeeB(-1, 0, 1, 0);

BoundaryPoint image_point(const Eigen::Matrix4d& L, const SplitVector4& v) {
  return null_to_torus(L * v, 1e-6);
}

}  // namespace

std::vector<BoundaryPoint> PolygonalEnd::sample_segments(int per_segment) const {
  // Segment samples: 'L' legs run through L_k [1,s,1,s], 'R' legs through
  // L_k [-s,1,s,1]; under the holonomy powers of the window.
  std::vector<BoundaryPoint> pts;
  const int n_charts = pole_order - 2;
  for (int m = -window; m <= window; ++m) {
    Eigen::Matrix4d hol_m = Eigen::Matrix4d::Identity();
    const Eigen::Matrix4d& h = holonomy.rep4;
    for (int i = 0; i < std::abs(m); ++i)
      hol_m = hol_m * (m > 0 ? h : holonomy.inverse().rep4);
    for (int k = 0; k < n_charts; ++k) {
      const Eigen::Matrix4d L = hol_m * chart_limits[k];
      for (int leg = 0; leg < 2; ++leg)
        for (int s_i = 0; s_i <= per_segment; ++s_i) {
          // Geometric sweep of the ruling parameter covers the segment
          // evenly near both endpoints.
          const double t = double(s_i) / per_segment;
          const double s = std::tan(0.5 * kPi * std::clamp(t, 0.005, 0.995) / 1.0);
          const SplitVector4 v = (leg == 0) ? SplitVector4(1, s, 1, s)
                                            : SplitVector4(-s, 1, s, 1);
          pts.push_back(image_point(L, v));
        }
    }
  }
  return pts;
}

AchronalScan achronal_scan(const std::vector<BoundaryPoint>& pts) {
  AchronalScan scan;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const double d = std::abs(wrap_pm_pi(pts[i].theta - pts[j].theta));
      const double dp =
          std::abs(wrap_pm_pi(pts[i].theta_prime - pts[j].theta_prime));
      if (d <= 1e-9 && dp <= 1e-9) continue;  // coincident sample
      switch (causal_class(pts[i], pts[j], 1e-9)) {
        case CausalClass::timelike: ++scan.timelike; break;
        case CausalClass::lightlike: ++scan.lightlike; break;
        case CausalClass::spacelike: ++scan.spacelike; break;
      }
    }
  return scan;
}

PolygonalEnd assemble_end(int pole_order, const IsometryPair& holonomy,
                          const std::vector<Eigen::Matrix4d>& chart_limits,
                          const AssembleOptions& opts) {
  if (pole_order < 3)
    throw std::invalid_argument("assemble_end: pole order must be >= 3");
  const int n_charts = pole_order - 2;
  if (static_cast<int>(chart_limits.size()) != n_charts)
    throw std::invalid_argument("assemble_end: need one limit per chart (n-2)");

  PolygonalEnd end;
  end.pole_order = pole_order;
  end.holonomy = holonomy;
  end.chart_limits = chart_limits;
  end.window = opts.window;

  // Fundamental vertices: A_1, M_1, A_2 (= B_1), ..., A_{n-2}, M_{n-2};
  // the closing vertex B_{n-2} must equal holonomy * A_1.
  for (int k = 0; k < n_charts; ++k) {
    const BoundaryPoint a = image_point(chart_limits[k], kVeeA);
    const BoundaryPoint m = image_point(chart_limits[k], kVeeM);
    const BoundaryPoint b = image_point(chart_limits[k], kVeeB);
    if (k > 0) {
      const BoundaryPoint prev_b = image_point(chart_limits[k - 1], kVeeB);
      end.max_join_defect = std::max(end.max_join_defect, boundary_dist(prev_b, a));
    }
    if (k == n_charts - 1) {
      const BoundaryPoint first_a = image_point(chart_limits[0], kVeeA);
      const BoundaryPoint closed = holonomy.apply(first_a);
      end.max_join_defect = std::max(end.max_join_defect, boundary_dist(b, closed));
    }
    end.fundamental_vertices.push_back(a);
    end.fundamental_vertices.push_back(m);
    end.foliation.push_back('L');  // A -> M along [1,s,1,s]: left factor fixed
    end.foliation.push_back('R');  // M -> B along [-s,1,s,1]: right factor fixed
  }
  if (end.max_join_defect > opts.join_tol) {
    std::ostringstream os;
    os << "assemble_end: consecutive vees fail the shared-endpoint identification "
       << "(defect " << end.max_join_defect << ")";
    throw std::runtime_error(os.str());
  }

  for (int m = -opts.window; m <= opts.window; ++m) {
    Eigen::Matrix4d hol_m = Eigen::Matrix4d::Identity();
    for (int i = 0; i < std::abs(m); ++i)
      hol_m = hol_m * (m > 0 ? holonomy.rep4 : holonomy.inverse().rep4);
    for (const BoundaryPoint& v : end.fundamental_vertices)
      end.windowed_vertices.push_back(null_to_torus(hol_m * v.null_rep, 1e-6));
  }

  if (opts.check_achronal) {
    const int per_seg = std::max(2, opts.achronal_samples / (2 * n_charts * (2 * opts.window + 1)));
    const AchronalScan scan = achronal_scan(end.sample_segments(per_seg));
    if (scan.timelike > 0) {
      std::ostringstream os;
      os << "assemble_end: achronality violated on " << scan.timelike << " of "
         << scan.pairs() << " sampled pairs";
      throw std::runtime_error(os.str());
    }
  }
  return end;
}

}  // namespace adsmax
