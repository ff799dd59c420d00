#include "adsmax/pole_background.hpp"

#include <cmath>

namespace adsmax {

namespace {

// C^2 quintic step on [0, 1].
double smoothstep5(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

}  // namespace

void PoleBackground::validate() const {
  model.validate();
  if (!(0.0 < r_flat && r_flat < r_hyp))
    throw std::invalid_argument("PoleBackground: need 0 < r_flat < r_hyp");
  if (!(disc_radius > r_hyp))
    throw std::invalid_argument("PoleBackground: disc_radius must exceed r_hyp");
}

double PoleBackground::log_flat_density(double x, double y) const {
  const Complex z(x, y);
  if (std::abs(z) < 1e-300) return 700.0;  // capped stand-in at the pole node
  return std::log(std::abs(eval_q(model, z)));
}

double PoleBackground::log_g_density(double x, double y) const {
  const double r = std::hypot(x, y);
  // curvature -2 metric on the disc of radius R: rho = 2 R^2 / (R^2 - r^2)^2
  const double rr = disc_radius * disc_radius;
  const double log_hyp = std::log(2.0 * rr) - 2.0 * std::log(rr - r * r);
  if (r >= r_hyp) return log_hyp;
  const double log_flat = log_flat_density(x, y);
  if (r <= r_flat) return log_flat;
  const double s = smoothstep5((r - r_flat) / (r_hyp - r_flat));
  return (1.0 - s) * log_flat + s * log_hyp;
}

double PoleBackground::weight(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r <= r_flat) return 1.0;  // g = |q| exactly
  return std::exp(2.0 * (log_flat_density(x, y) - log_g_density(x, y)));
}

double PoleBackground::curvature(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r <= r_flat) return 0.0;   // log|q| is harmonic off the zeros
  if (r >= r_hyp) return -2.0;
  // K = -Lap(log rho) / (2 rho), five-point stencil on the analytic density.
  const double fd = 1e-4;
  const double lap = (log_g_density(x + fd, y) + log_g_density(x - fd, y) +
                      log_g_density(x, y + fd) + log_g_density(x, y - fd) -
                      4.0 * log_g_density(x, y)) /
                     (fd * fd);
  return -0.5 * lap * std::exp(-log_g_density(x, y));
}

double PoleBackground::inv_density(double x, double y) const {
  const double lg = log_g_density(x, y);
  if (lg > 690.0) return 0.0;  // pole node: the metric Laplacian degenerates
  return std::exp(-lg);
}

PoleProblem pole_problem(const PoleBackground& bg, double half_width, double h,
                         double boundary_margin) {
  bg.validate();
  if (!(half_width > bg.r_hyp))
    throw std::invalid_argument("pole_problem: grid must contain the hyperbolic region");
  GridDomain g = GridDomain::with_spacing(-half_width, half_width, -half_width, half_width, h);
  auto sub_value = [&bg](double x, double y) {
    return 0.5 * (bg.log_flat_density(x, y) - bg.log_g_density(x, y));
  };
  g.dirichlet = [sub_value, boundary_margin](double x, double y) {
    return sub_value(x, y) + boundary_margin;
  };
  PoleProblem pp;
  pp.problem = VortexProblem::from_functions(
      g, [&bg](double x, double y) { return bg.weight(x, y); },
      [&bg](double x, double y) { return bg.curvature(x, y); },
      [&bg](double x, double y) { return bg.inv_density(x, y); });
  pp.log_flat = Field::sampled(g, [&bg](double x, double y) { return bg.log_flat_density(x, y); });
  pp.log_g = Field::sampled(g, [&bg](double x, double y) { return bg.log_g_density(x, y); });
  return pp;
}

BracketResult auto_bracket(const PoleProblem& pp, double alpha0, double beta0, double cap) {
  BracketResult out;
  out.cap = cap;
  out.sub = subsolution_flat_log(pp.log_flat, pp.log_g, cap);
  double alpha = alpha0;
  for (int ia = 0; ia < 8; ++ia) {
    double beta = beta0;
    for (int ib = 0; ib < 16; ++ib) {
      Field sup = supersolution_beta_f(pp.problem.domain, alpha, beta);
      if (check_supersolution(pp.problem, sup, 0.0).pass) {
        // u- <= u+ must hold as well; enlarge beta until it does.
        bool ordered = true;
        for (size_t k = 0; k < sup.a.size(); ++k)
          if (out.sub.a[k] > sup.a[k] + 1e-12) {
            ordered = false;
            break;
          }
        if (ordered) {
          out.alpha = alpha;
          out.beta = beta;
          out.super = std::move(sup);
          out.certified = true;
          return out;
        }
      }
      beta *= 2.0;
    }
    alpha *= 0.5;
  }
  return out;  // certified = false
}

}  // namespace adsmax
