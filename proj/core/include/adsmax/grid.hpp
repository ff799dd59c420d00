#pragma once

// Rectangular finite-difference grids and plain scalar fields.

#include <functional>
#include <stdexcept>
#include <vector>

namespace adsmax {

struct GridDomain {
  double x0 = 0.0, y0 = 0.0;
  double h = 0.1;  // uniform spacing in both directions
  int nx = 3, ny = 3;
  // Dirichlet data, evaluated on boundary nodes.
  std::function<double(double, double)> dirichlet = [](double, double) { return 0.0; };

  // Snaps the upper corner to the lattice: x1 <- x0 + (nx-1) h.
  static GridDomain with_spacing(double x0, double x1, double y0, double y1, double h);

  double x(int i) const { return x0 + i * h; }
  double y(int j) const { return y0 + j * h; }
  double x1() const { return x(nx - 1); }
  double y1() const { return y(ny - 1); }
  int num_nodes() const { return nx * ny; }
  bool is_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
  }
  void validate() const;
};

struct Field {
  int nx = 0, ny = 0;
  std::vector<double> a;

  Field() = default;
  Field(int nx_, int ny_, double fill = 0.0) : nx(nx_), ny(ny_), a(size_t(nx_) * ny_, fill) {}

  double& at(int i, int j) { return a[size_t(j) * nx + i]; }
  double at(int i, int j) const { return a[size_t(j) * nx + i]; }

  static Field sampled(const GridDomain& g, const std::function<double(double, double)>& f);

  double max_abs() const;
  // Bilinear interpolation at physical coordinates; throws std::out_of_range
  // outside the domain.
  double interp(const GridDomain& g, double x, double y) const;
};

// Five-point Laplacian at an interior node.
double laplacian5(const Field& u, const GridDomain& g, int i, int j);

}  // namespace adsmax
