#include "adsmax/svg.hpp"

#include "adsmax/io.hpp"

#include <cmath>
#include <sstream>

namespace adsmax {

TorusSvg::TorusSvg(int size_px) : size_(size_px) {
  std::ostringstream os;
  // frame and the null-direction grid at +-45 degrees
  os << "<rect x='0' y='0' width='" << size_ << "' height='" << size_
     << "' fill='white' stroke='black'/>\n";
  for (int k = -1; k <= 1; ++k) {
    const double off = k * size_;
    os << "<line x1='" << off << "' y1='" << size_ << "' x2='" << off + size_
       << "' y2='0' stroke='#dddddd'/>\n";
    os << "<line x1='" << off << "' y1='0' x2='" << off + size_ << "' y2='" << size_
       << "' stroke='#dddddd'/>\n";
  }
  body_ = os.str();
}

double TorusSvg::px(double angle) const { return wrap_two_pi(angle) / kTwoPi * size_; }

void TorusSvg::add_point(const BoundaryPoint& p, const std::string& color, double radius) {
  std::ostringstream os;
  os << "<circle cx='" << px(p.theta) << "' cy='" << size_ - px(p.theta_prime) << "' r='"
     << radius << "' fill='" << color << "'/>\n";
  body_ += os.str();
}

void TorusSvg::add_segment(const BoundaryPoint& a, const BoundaryPoint& b,
                           const std::string& color, double width) {
  // Short displacement on the torus; draw up to three unwrapped copies so
  // the visible strip is covered.
  const double dx = wrap_pm_pi(b.theta - a.theta);
  const double dy = wrap_pm_pi(b.theta_prime - a.theta_prime);
  const double ax = px(a.theta), ay = px(a.theta_prime);
  const double sx = dx / kTwoPi * size_, sy = dy / kTwoPi * size_;
  std::ostringstream os;
  for (int ox = -1; ox <= 1; ++ox)
    for (int oy = -1; oy <= 1; ++oy) {
      const double x0 = ax + ox * size_, y0 = ay + oy * size_;
      const double x1 = x0 + sx, y1 = y0 + sy;
      if (std::max(x0, x1) < 0 || std::min(x0, x1) > size_ || std::max(y0, y1) < 0 ||
          std::min(y0, y1) > size_)
        continue;
      os << "<line x1='" << x0 << "' y1='" << size_ - y0 << "' x2='" << x1 << "' y2='"
         << size_ - y1 << "' stroke='" << color << "' stroke-width='" << width << "'/>\n";
    }
  body_ += os.str();
}

void TorusSvg::add_polyline(const std::vector<BoundaryPoint>& pts, const std::string& color,
                            double width) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) add_segment(pts[i], pts[i + 1], color, width);
}

std::string TorusSvg::str() const {
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << size_ << "' height='" << size_
     << "' viewBox='0 0 " << size_ << ' ' << size_ << "'>\n"
     << body_ << "</svg>\n";
  return os.str();
}

std::string end_svg(const PolygonalEnd& end) {
  TorusSvg svg;
  const auto samples = end.sample_segments(24);
  for (const BoundaryPoint& p : samples) svg.add_point(p, "#3366cc", 1.2);
  for (const BoundaryPoint& v : end.windowed_vertices) svg.add_point(v, "#cc3333", 3.0);
  const LimitFixedPair fixed = limit_fixed_pair(end.holonomy);
  svg.add_point(fixed.pp, "#118822", 4.5);
  svg.add_point(fixed.mm, "#882211", 4.5);
  return svg.str();
}

std::string curve_svg(const PolygonalCurve& curve, int samples_per_segment) {
  TorusSvg svg;
  for (const auto& seg : curve.segments) {
    std::vector<BoundaryPoint> pts;
    for (int s = 0; s < samples_per_segment; ++s)
      pts.push_back(curve.sample(seg, double(s) / (samples_per_segment - 1)));
    svg.add_polyline(pts, seg.foliation == 'L' ? "#3366cc" : "#33aa66", 1.5);
  }
  for (const BoundaryPoint& v : curve.vertices) svg.add_point(v, "#cc3333", 2.5);
  const LimitFixedPair fixed = limit_fixed_pair(curve.holonomy);
  svg.add_point(fixed.pp, "#118822", 4.5);
  svg.add_point(fixed.mm, "#882211", 4.5);
  return svg.str();
}

}  // namespace adsmax
