#pragma once

// SVG plots on the unrolled boundary torus: the [0, 2 pi)^2 square with the
// two null directions at +-45 degrees.

#include "adsmax/crown.hpp"
#include "adsmax/polygonal_end.hpp"

#include <string>

namespace adsmax {

class TorusSvg {
 public:
  explicit TorusSvg(int size_px = 640);

  void add_point(const BoundaryPoint& p, const std::string& color, double radius = 3.0);
  // Straight segment between two boundary points drawn along the short
  // torus displacement, split at the wrap boundaries.
  void add_segment(const BoundaryPoint& a, const BoundaryPoint& b,
                   const std::string& color, double width = 1.5);
  void add_polyline(const std::vector<BoundaryPoint>& pts, const std::string& color,
                    double width = 1.5);

  std::string str() const;

 private:
  double px(double angle) const;
  int size_;
  std::string body_;
};

std::string end_svg(const PolygonalEnd& end);
std::string curve_svg(const PolygonalCurve& curve, int samples_per_segment = 24);

}  // namespace adsmax
