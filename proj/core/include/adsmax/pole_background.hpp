#pragma once

// Chart-local background metric near a pole: g equals the flat metric |q|
// inside |z| <= r_flat, a curvature -2 disc metric outside |z| >= r_hyp, and
// a smooth log-density blend in the collar between. This realises, on a
// single chart, the interpolated background used to set up the vortex
// equation with weight ||q||_g^2 -> 1 and K_g -> 0 at the pole.

#include "adsmax/grid.hpp"
#include "adsmax/quad_diff.hpp"
#include "adsmax/vortex.hpp"

namespace adsmax {

struct PoleBackground {
  PoleModel model;
  double r_flat = 0.35;   // g = |q| for |z| <= r_flat
  double r_hyp = 0.8;     // g = hyperbolic (-2) for |z| >= r_hyp
  double disc_radius = 3.0;  // radius of the curvature -2 disc metric

  double log_flat_density(double x, double y) const;  // log |q(z)|
  double log_g_density(double x, double y) const;
  double weight(double x, double y) const;        // ||q||_g^2
  double curvature(double x, double y) const;     // K_g (finite differences in the collar)
  double inv_density(double x, double y) const;   // 1/rho_g, 0 at the pole node

  void validate() const;
};

// Assembles the vortex problem for the pole background on a square chart
// grid centred at the pole, with Dirichlet data u = sub + margin.
struct PoleProblem {
  VortexProblem problem;
  Field log_flat;  // log |q| nodewise (pole node set to the capped limit)
  Field log_g;
};
PoleProblem pole_problem(const PoleBackground& bg, double half_width, double h,
                         double boundary_margin = 0.01);

struct BracketResult {
  double alpha = 0.0, beta = 0.0, cap = 0.0;
  Field sub, super;
  bool certified = false;  // supersolution check passed and sub <= super
};

// Auto-search: alpha halved from alpha0, beta doubled from beta0, until the
// nodewise supersolution check passes and the bracket is ordered. cap is the
// constant floor of the subsolution.
BracketResult auto_bracket(const PoleProblem& pp, double alpha0 = 0.05, double beta0 = 1.0,
                           double cap = 10.0);

}  // namespace adsmax
