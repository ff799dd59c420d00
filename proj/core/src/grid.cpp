#include "adsmax/grid.hpp"

#include <algorithm>
#include <cmath>

namespace adsmax {

GridDomain GridDomain::with_spacing(double x0, double x1, double y0, double y1, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("GridDomain: spacing must be positive");
  GridDomain g;
  g.x0 = x0;
  g.y0 = y0;
  g.h = h;
  g.nx = static_cast<int>(std::lround((x1 - x0) / h)) + 1;
  g.ny = static_cast<int>(std::lround((y1 - y0) / h)) + 1;
  g.validate();
  return g;
}

void GridDomain::validate() const {
  if (!(h > 0.0)) throw std::invalid_argument("GridDomain: spacing must be positive");
  if (nx < 3 || ny < 3)
    throw std::invalid_argument("GridDomain: need at least 3 nodes per direction");
}

Field Field::sampled(const GridDomain& g, const std::function<double(double, double)>& f) {
  Field out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out.at(i, j) = f(g.x(i), g.y(j));
  return out;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

double Field::interp(const GridDomain& g, double x, double y) const {
  const double fx = (x - g.x0) / g.h;
  const double fy = (y - g.y0) / g.h;
  if (fx < -1e-9 || fy < -1e-9 || fx > nx - 1 + 1e-9 || fy > ny - 1 + 1e-9)
    throw std::out_of_range("Field::interp: point outside grid");
  int i = std::clamp(static_cast<int>(fx), 0, nx - 2);
  int j = std::clamp(static_cast<int>(fy), 0, ny - 2);
  const double s = std::clamp(fx - i, 0.0, 1.0);
  const double t = std::clamp(fy - j, 0.0, 1.0);
  return (1 - s) * (1 - t) * at(i, j) + s * (1 - t) * at(i + 1, j) +
         (1 - s) * t * at(i, j + 1) + s * t * at(i + 1, j + 1);
}

double laplacian5(const Field& u, const GridDomain& g, int i, int j) {
  return (u.at(i + 1, j) + u.at(i - 1, j) + u.at(i, j + 1) + u.at(i, j - 1) -
          4.0 * u.at(i, j)) /
         (g.h * g.h);
}

}  // namespace adsmax
