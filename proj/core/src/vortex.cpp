#include "adsmax/vortex.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <cmath>
#include <sstream>

namespace adsmax {

namespace {

// e^{2u} - e^{-2u} w + (1 - w) + K/2, written through expm1 so the near-pole
// regime (w = 1, u -> 0) evaluates without cancellation.
inline double nonlinearity(double u, double w, double k) {
  return std::expm1(2.0 * u) - w * std::expm1(-2.0 * u) + (1.0 - w) + 0.5 * k;
}

inline double nonlinearity_du(double u, double w) {
  return 2.0 * std::exp(2.0 * u) + 2.0 * w * std::exp(-2.0 * u);
}

Field with_boundary(const VortexProblem& p, const Field& interior_like) {
  Field u = interior_like;
  for (int j = 0; j < p.domain.ny; ++j)
    for (int i = 0; i < p.domain.nx; ++i)
      if (p.domain.is_boundary(i, j)) u.at(i, j) = p.domain.dirichlet(p.domain.x(i), p.domain.y(j));
  return u;
}

}  // namespace

VortexProblem VortexProblem::flat(const GridDomain& domain, double weight_value,
                                  double curvature_value) {
  VortexProblem p;
  p.domain = domain;
  p.weight = Field(domain.nx, domain.ny, weight_value);
  p.curvature = Field(domain.nx, domain.ny, curvature_value);
  p.inv_density = Field(domain.nx, domain.ny, 1.0);
  p.validate();
  return p;
}

VortexProblem VortexProblem::from_functions(
    const GridDomain& domain, const std::function<double(double, double)>& weight,
    const std::function<double(double, double)>& curvature,
    const std::function<double(double, double)>& inv_density) {
  VortexProblem p;
  p.domain = domain;
  p.weight = Field::sampled(domain, weight);
  p.curvature = Field::sampled(domain, curvature);
  p.inv_density = Field::sampled(domain, inv_density);
  p.validate();
  return p;
}

void VortexProblem::validate() const {
  domain.validate();
  auto check_size = [&](const Field& f, const char* name) {
    if (f.nx != domain.nx || f.ny != domain.ny) {
      std::ostringstream os;
      os << "VortexProblem: field '" << name << "' does not match the grid";
      throw std::invalid_argument(os.str());
    }
  };
  check_size(weight, "weight");
  check_size(curvature, "curvature");
  check_size(inv_density, "inv_density");
  for (double w : weight.a)
    if (!(w >= 0.0)) throw std::invalid_argument("VortexProblem: weight must be >= 0");
  for (double d : inv_density.a)
    if (!(d >= 0.0)) throw std::invalid_argument("VortexProblem: inv_density must be >= 0");
  for (int j = 0; j < domain.ny; ++j)
    for (int i = 0; i < domain.nx; ++i)
      if (domain.is_boundary(i, j) && !std::isfinite(domain.dirichlet(domain.x(i), domain.y(j))))
        throw std::invalid_argument("VortexProblem: Dirichlet data must be finite");
}

Field pde_residual(const VortexProblem& p, const Field& u) {
  Field r(p.domain.nx, p.domain.ny, 0.0);
  for (int j = 1; j < p.domain.ny - 1; ++j)
    for (int i = 1; i < p.domain.nx - 1; ++i)
      r.at(i, j) = 0.5 * p.inv_density.at(i, j) * laplacian5(u, p.domain, i, j) -
                   nonlinearity(u.at(i, j), p.weight.at(i, j), p.curvature.at(i, j));
  return r;
}

SolveResult solve(const VortexProblem& p, const SolveOptions& opts) {
  p.validate();
  const int nx = p.domain.nx, ny = p.domain.ny;
  const int mi = nx - 2, mj = ny - 2;
  const int n = mi * mj;
  const double inv_h2 = 1.0 / (p.domain.h * p.domain.h);
  auto idx = [mi](int i, int j) { return (j - 1) * mi + (i - 1); };

  Field u = opts.initial_guess ? *opts.initial_guess : Field(nx, ny, 0.0);
  u = with_boundary(p, u);

  Eigen::SparseMatrix<double> J(n, n);
  {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(size_t(n) * 5);
    for (int j = 1; j < ny - 1; ++j)
      for (int i = 1; i < nx - 1; ++i) {
        const int row = idx(i, j);
        trip.emplace_back(row, row, 1.0);
        if (i > 1) trip.emplace_back(row, idx(i - 1, j), 1.0);
        if (i < nx - 2) trip.emplace_back(row, idx(i + 1, j), 1.0);
        if (j > 1) trip.emplace_back(row, idx(i, j - 1), 1.0);
        if (j < ny - 2) trip.emplace_back(row, idx(i, j + 1), 1.0);
      }
    J.setFromTriplets(trip.begin(), trip.end());
  }
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(J);

  auto fill_jacobian = [&](const Field& uf) {
    for (int j = 1; j < ny - 1; ++j)
      for (int i = 1; i < nx - 1; ++i) {
        const int row = idx(i, j);
        const double c = 0.5 * p.inv_density.at(i, j) * inv_h2;
        J.coeffRef(row, row) = -4.0 * c - nonlinearity_du(uf.at(i, j), p.weight.at(i, j));
        if (i > 1) J.coeffRef(row, idx(i - 1, j)) = c;
        if (i < nx - 2) J.coeffRef(row, idx(i + 1, j)) = c;
        if (j > 1) J.coeffRef(row, idx(i, j - 1)) = c;
        if (j < ny - 2) J.coeffRef(row, idx(i, j + 1)) = c;
      }
  };

  auto interior_residual = [&](const Field& uf, Eigen::VectorXd& r) {
    const Field rf = pde_residual(p, uf);
    for (int j = 1; j < ny - 1; ++j)
      for (int i = 1; i < nx - 1; ++i) r[idx(i, j)] = rf.at(i, j);
  };

  SolveResult out;
  Eigen::VectorXd r(n), rt(n);
  interior_residual(u, r);
  double res = r.cwiseAbs().maxCoeff();
  out.residual_history.push_back(res);

  for (int it = 0; it < opts.max_iterations && res > opts.tol; ++it) {
    fill_jacobian(u);
    lu.factorize(J);
    if (lu.info() != Eigen::Success) break;
    const Eigen::VectorXd d = lu.solve(r);

    double alpha = 1.0;
    bool accepted = false;
    Field trial = u;
    for (int halv = 0; halv <= opts.max_damping_halvings; ++halv) {
      for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i)
          trial.at(i, j) = u.at(i, j) - alpha * d[idx(i, j)];
      interior_residual(trial, rt);
      const double res_t = rt.cwiseAbs().maxCoeff();
      if (res_t < res || res_t <= opts.tol) {
        u = trial;
        r = rt;
        res = res_t;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    ++out.iterations;
    out.residual_history.push_back(res);
    if (!accepted) break;
  }

  out.converged = res <= opts.tol;
  out.field.domain = p.domain;
  out.field.v = u;
  out.field.residual_sup = res;
  return out;
}

std::vector<Field> monotone_iterates(const VortexProblem& p, const Field& start, int sweeps) {
  p.validate();
  const int nx = p.domain.nx, ny = p.domain.ny;
  const int mi = nx - 2;
  const int n = mi * (ny - 2);
  const double inv_h2 = 1.0 / (p.domain.h * p.domain.h);
  auto idx = [mi](int i, int j) { return (j - 1) * mi + (i - 1); };

  std::vector<Field> iters;
  Field u = with_boundary(p, start);
  iters.push_back(u);

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (int s = 0; s < sweeps; ++s) {
    // Solve (1/2 Lap_g - M) u_next = F(u) - M u with M >= dF/du on the
    // interval swept by the iteration (a margin over the value at u).
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(size_t(n) * 5);
    Eigen::VectorXd b(n);
    for (int j = 1; j < ny - 1; ++j)
      for (int i = 1; i < nx - 1; ++i) {
        const int row = idx(i, j);
        const double c = 0.5 * p.inv_density.at(i, j) * inv_h2;
        const double w = p.weight.at(i, j);
        const double uk = u.at(i, j);
        const double m = 2.0 * nonlinearity_du(uk, w);
        trip.emplace_back(row, row, -4.0 * c - m);
        if (i > 1) trip.emplace_back(row, idx(i - 1, j), c);
        if (i < nx - 2) trip.emplace_back(row, idx(i + 1, j), c);
        if (j > 1) trip.emplace_back(row, idx(i, j - 1), c);
        if (j < ny - 2) trip.emplace_back(row, idx(i, j + 1), c);
        double rhs = nonlinearity(uk, w, p.curvature.at(i, j)) - m * uk;
        // Dirichlet neighbours move to the right-hand side.
        if (i == 1) rhs -= c * u.at(0, j);
        if (i == nx - 2) rhs -= c * u.at(nx - 1, j);
        if (j == 1) rhs -= c * u.at(i, 0);
        if (j == ny - 2) rhs -= c * u.at(i, ny - 1);
        b[row] = rhs;
      }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    lu.compute(A);
    const Eigen::VectorXd x = lu.solve(b);
    for (int j = 1; j < ny - 1; ++j)
      for (int i = 1; i < nx - 1; ++i) u.at(i, j) = x[idx(i, j)];
    iters.push_back(u);
  }
  return iters;
}

Field supersolution_beta_f(const GridDomain& domain, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta >= 0.0))
    throw std::invalid_argument("supersolution_beta_f: requires alpha > 0, beta >= 0");
  Field f(domain.nx, domain.ny);
  for (int j = 0; j < domain.ny; ++j)
    for (int i = 0; i < domain.nx; ++i) {
      const double r2 = domain.x(i) * domain.x(i) + domain.y(j) * domain.y(j);
      f.at(i, j) = beta * std::pow(r2, alpha);  // |z|^{2 alpha} = (r^2)^alpha
    }
  return f;
}

NodewiseCheck check_supersolution(const VortexProblem& p, const Field& u_plus, double slack) {
  NodewiseCheck out;
  for (int j = 1; j < p.domain.ny - 1; ++j)
    for (int i = 1; i < p.domain.nx - 1; ++i) {
      const double defect =
          0.5 * p.inv_density.at(i, j) * laplacian5(u_plus, p.domain, i, j) -
          nonlinearity(u_plus.at(i, j), p.weight.at(i, j), p.curvature.at(i, j));
      out.worst_margin = std::max(out.worst_margin, defect);
      if (defect > slack) {
        out.pass = false;
        out.violations.emplace_back(i, j);
      }
    }
  return out;
}

Field subsolution_flat_log(const Field& log_flat_density, const Field& log_g_density,
                           double cap) {
  if (!(cap > 0.0)) throw std::invalid_argument("subsolution_flat_log: cap must be > 0");
  Field w(log_flat_density.nx, log_flat_density.ny);
  for (size_t i = 0; i < w.a.size(); ++i)
    w.a[i] = std::max(0.5 * (log_flat_density.a[i] - log_g_density.a[i]), -cap);
  return w;
}

NodewiseCheck check_subsolution(const VortexProblem& p, const Field& u_minus, double cap,
                                double slack) {
  NodewiseCheck out;
  const double branch_eps = 1e-12;
  auto on_cap = [&](int i, int j) { return u_minus.at(i, j) <= -cap + branch_eps; };
  for (int j = 1; j < p.domain.ny - 1; ++j)
    for (int i = 1; i < p.domain.nx - 1; ++i) {
      const bool c = on_cap(i, j);
      const bool mixed = on_cap(i - 1, j) != c || on_cap(i + 1, j) != c ||
                         on_cap(i, j - 1) != c || on_cap(i, j + 1) != c;
      const double w = p.weight.at(i, j);
      const double k = p.curvature.at(i, j);
      auto defect_at = [&](double center) {
        const double lap = (u_minus.at(i + 1, j) + u_minus.at(i - 1, j) +
                            u_minus.at(i, j + 1) + u_minus.at(i, j - 1) - 4.0 * center) /
                           (p.domain.h * p.domain.h);
        return 0.5 * p.inv_density.at(i, j) * lap - nonlinearity(center, w, k);
      };
      if (!mixed) {
        const double defect = defect_at(u_minus.at(i, j));
        out.worst_margin = std::min(out.worst_margin, defect);
        if (defect < -slack) {
          out.pass = false;
          out.violations.emplace_back(i, j);
        }
      } else {
        // At the kink neither branch's stencil is clean; accept the node if
        // either the constant cap or the uncapped value certifies.
        const double defect_cap =
            0.5 * p.inv_density.at(i, j) * 0.0 - nonlinearity(-cap, w, k);
        const double defect_w = defect_at(u_minus.at(i, j));
        if (defect_cap < -slack && defect_w < -slack) {
          out.pass = false;
          out.violations.emplace_back(i, j);
        }
      }
    }
  return out;
}

DecayFit decay_slope(const ConformalFactorField& field, double origin_x, double origin_y,
                     double theta, double s0, double s1, int n_samples) {
  DecayFit fit;
  if (n_samples < 3 || !(s1 > s0)) {
    fit.message = "decay_slope: bad window";
    return fit;
  }
  const double cx = std::cos(theta), cy = std::sin(theta);
  std::vector<double> xs, ys;
  xs.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    const double s = s0 + (s1 - s0) * k / (n_samples - 1);
    const double px = origin_x + s * cx, py = origin_y + s * cy;
    double v;
    v = field.v.interp(field.domain, px, py);  // throws if the ray exits
    if (!(v > 0.0)) {
      ++fit.n_excluded;
      continue;
    }
    const double rho = std::hypot(px, py);
    xs.push_back(rho);
    ys.push_back(std::log(v * std::sqrt(rho)));
  }
  fit.n_used = static_cast<int>(xs.size());
  if (fit.n_used < 3) {
    fit.message = "decay_slope: fewer than 3 positive samples";
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < fit.n_used; ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double nloc = fit.n_used;
  const double denom = nloc * sxx - sx * sx;
  fit.slope = (nloc * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / nloc;
  fit.non_decaying = fit.slope > -1e-3;
  fit.ok = !fit.non_decaying;
  if (fit.non_decaying) fit.message = "decay_slope: field is not decaying along the ray";
  return fit;
}

PrincipalCurvature principal_curvature(const Field& u, const Field& weight) {
  PrincipalCurvature out;
  out.lambda = Field(u.nx, u.ny);
  for (int j = 0; j < u.ny; ++j)
    for (int i = 0; i < u.nx; ++i) {
      const double l = std::exp(-2.0 * u.at(i, j)) * std::sqrt(weight.at(i, j));
      out.lambda.at(i, j) = l;
      if (l >= 1.0) out.flagged.emplace_back(i, j);
    }
  return out;
}

}  // namespace adsmax
