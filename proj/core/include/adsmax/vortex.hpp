#pragma once

// Finite-difference solver for the vortex equation
//
//     (1/2) Lap_g u = e^{2u} - e^{-2u} w + (1/2) K_g,     w = ||q||_g^2 >= 0,
//
// on a rectangular chart grid, together with the sub/supersolution
// machinery that brackets the solution and the decay / curvature
// diagnostics.
//
// The metric enters through inv_density = 1/rho_g (Lap_g = rho_g^{-1} Lap);
// a flat chart has inv_density = 1. Nodes with inv_density = 0 model points
// where the background density blows up (the pole itself): there the
// equation degenerates to e^{2u} = e^{-2u} w.

#include "adsmax/grid.hpp"

#include <optional>
#include <vector>

namespace adsmax {

struct VortexProblem {
  GridDomain domain;
  Field weight;       // ||q||_g^2, nonnegative
  Field curvature;    // K_g
  Field inv_density;  // 1/rho_g, nonnegative; all ones for a flat chart

  static VortexProblem flat(const GridDomain& domain, double weight_value = 1.0,
                            double curvature_value = 0.0);
  static VortexProblem from_functions(const GridDomain& domain,
                                      const std::function<double(double, double)>& weight,
                                      const std::function<double(double, double)>& curvature,
                                      const std::function<double(double, double)>& inv_density);
  void validate() const;
};

struct ConformalFactorField {
  GridDomain domain;
  Field v;
  double residual_sup = 0.0;           // sup of the unscaled PDE residual
  std::optional<Field> sub, super;     // bracket, when computed
};

struct SolveOptions {
  double tol = 1e-8;       // sup-norm target for the unscaled residual
  int max_iterations = 60;
  int max_damping_halvings = 30;
  std::optional<Field> initial_guess;
};

struct SolveResult {
  ConformalFactorField field;
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;  // unscaled sup-norm per iteration
};

// Damped Newton on the 5-point discretisation. The nonlinearity is strictly
// increasing in u, so the Jacobian is negative definite and the damped
// iteration converges from any bracket point. Throws std::invalid_argument
// for negative weight or non-finite boundary data.
SolveResult solve(const VortexProblem& problem, const SolveOptions& opts = {});

// Unscaled residual (1/2) inv_density Lap_h u - F(x, u) at interior nodes
// (zero on the boundary frame).
Field pde_residual(const VortexProblem& problem, const Field& u);

// One monotone-iteration sweep sequence: starting from a supersolution the
// iterates decrease nodewise to the solution, from a subsolution they
// increase. Returns the iterates' fields (including the start).
std::vector<Field> monotone_iterates(const VortexProblem& problem, const Field& start,
                                     int sweeps);

// u+ = beta * f with f = |z|^{2 alpha}; grid coordinates are interpreted as
// the chart coordinate z = x + iy.
Field supersolution_beta_f(const GridDomain& domain, double alpha, double beta);

struct NodewiseCheck {
  bool pass = true;
  std::vector<std::pair<int, int>> violations;  // node indices (i, j)
  double worst_margin = 0.0;  // most positive (super) / most negative (sub) defect
};

// Verifies (1/2) Lap_g u+ - F(x, u+) <= slack at interior nodes.
NodewiseCheck check_supersolution(const VortexProblem& problem, const Field& u_plus,
                                  double slack = 0.0);

// Verifies (1/2) Lap_g u- - F(x, u-) >= -slack away from the cap locus.
// Nodes whose stencil mixes the two branches of max(w, -B) are skipped, and
// nodes where neither branch certifies are reported.
NodewiseCheck check_subsolution(const VortexProblem& problem, const Field& u_minus,
                                double cap, double slack);

// u- = max(w, -B) with w = (1/2) log(|q| / rho_g) = (1/2) log(flat/g density
// ratio); fields supplied nodewise.
Field subsolution_flat_log(const Field& log_flat_density, const Field& log_g_density,
                           double cap);

struct DecayFit {
  bool ok = false;
  double slope = 0.0;
  double intercept = 0.0;
  int n_used = 0;
  int n_excluded = 0;     // non-positive samples
  bool non_decaying = false;
  std::string message;
};

// Least-squares slope of log(v(s) sqrt(s)) against s along the ray
// origin + s e^{i theta}, s in [s0, s1]. Samples with v <= 0 are excluded
// and reported; a slope close to zero is flagged as non-decaying.
DecayFit decay_slope(const ConformalFactorField& field, double origin_x, double origin_y,
                     double theta, double s0, double s1, int n_samples = 200);

struct PrincipalCurvature {
  Field lambda;  // e^{-2u} ||q||_g nodewise
  std::vector<std::pair<int, int>> flagged;  // nodes with lambda >= 1
};

PrincipalCurvature principal_curvature(const Field& u, const Field& weight);

}  // namespace adsmax
