#include "adsmax/quad_diff.hpp"

#include <algorithm>
#include <cmath>

namespace adsmax {

namespace {

constexpr double kPiLocal = 3.141592653589793238462643383279502884;

bool in_sector_eps(Complex x, double eps) {
  const double phi = std::arg(x);
  if (std::abs(x) == 0.0) return false;
  if (phi > -eps && phi <= kPiLocal) return true;
  return phi < -kPiLocal + eps;  // just past +pi, wrapped by atan2
}

}  // namespace

PoleModel PoleModel::normal_form(int order, Complex residue_param, double radius) {
  PoleModel m;
  m.order = order;
  m.radius = radius;
  m.coeffs.assign(order - 1, Complex(0.0, 0.0));
  m.coeffs[0] = 1.0;
  if (order % 2 == 0 && residue_param != Complex(0.0, 0.0)) {
    // (z^{-n/2} + A z^{-1})^2 contributes 2A z^{-n/2-1} and A^2 z^{-2}.
    m.coeffs[order / 2 - 1] += 2.0 * residue_param;
    m.coeffs[order - 2] += residue_param * residue_param;
  }
  m.validate();
  return m;
}

void PoleModel::validate() const {
  if (order < 3) throw std::invalid_argument("PoleModel: order must be >= 3");
  if (coeffs.size() != static_cast<size_t>(order - 1))
    throw std::invalid_argument("PoleModel: expected coefficients a_n..a_2");
  if (std::abs(coeffs[0]) == 0.0)
    throw std::invalid_argument("PoleModel: leading coefficient a_n must be nonzero");
  if (!(radius > 0.0)) throw std::invalid_argument("PoleModel: radius must be positive");
}

bool PoleModel::is_normal_form(double tol) const {
  if (std::abs(coeffs[0] - 1.0) > tol) return false;
  if (order % 2 == 1) {
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (std::abs(coeffs[i]) > tol) return false;
    return true;
  }
  const Complex a = coeffs[order / 2 - 1] / 2.0;
  for (size_t i = 1; i < coeffs.size(); ++i) {
    Complex want(0.0, 0.0);
    if (i == static_cast<size_t>(order / 2 - 1)) want = 2.0 * a;
    if (i == static_cast<size_t>(order - 2)) want += a * a;
    if (std::abs(coeffs[i] - want) > tol) return false;
  }
  return true;
}

Complex PoleModel::even_residue_param() const {
  if (order % 2 != 0)
    throw std::invalid_argument("even_residue_param: pole order is odd");
  return coeffs[order / 2 - 1] / 2.0;
}

Complex eval_q(const PoleModel& model, Complex z) {
  if (z == Complex(0.0, 0.0))
    throw std::invalid_argument("eval_q: z = 0 is the pole");
  // a_2/z^2 + (1/z)(a_3 + (1/z)(a_4 + ...)) evaluated inner-out.
  const Complex inv = 1.0 / z;
  Complex acc(0.0, 0.0);
  for (const Complex& a : model.coeffs) acc = acc * inv + a;  // a_n first
  return acc * inv * inv;
}

double flat_density(const PoleModel& model, Complex z) {
  return std::abs(eval_q(model, z));
}

double flat_circle_length(const PoleModel& model, double rho, int n_samples) {
  // ds = sqrt(|q|) |dz| on z = rho e^{i t}, composite Simpson over [0, 2 pi].
  if (n_samples % 2 == 1) ++n_samples;
  const double h = 2.0 * kPiLocal / n_samples;
  auto f = [&](double t) {
    const Complex z = rho * Complex(std::cos(t), std::sin(t));
    return std::sqrt(flat_density(model, z)) * rho;
  };
  double sum = f(0.0) + f(2.0 * kPiLocal);
  for (int i = 1; i < n_samples; ++i) sum += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

NaturalChart::NaturalChart(const PoleModel& model, int index) {
  model.validate();
  if (!model.is_normal_form(1e-10))
    throw std::invalid_argument(
        "NaturalChart: model must be in normal form (use PoleModel::normal_form)");
  if (index < 1 || index > model.num_charts())
    throw std::invalid_argument("NaturalChart: index out of range 1..n-2");
  n_ = model.order;
  k_ = index;
  radius_ = model.radius;
  const double m = n_ - 2;
  c0_ = std::pow(m / 2.0, -2.0 / m);
  rot_ = std::exp(Complex(0.0, 2.0 * kSectorPi * k_ / m));
  if (even()) {
    a_param_ = model.even_residue_param();
    c_param_ = (k_ % 2 == 0 ? 1.0 : -1.0) * 2.0 * a_param_ / m;
  }

  // Auto-tune B (and D) from heuristic seeds, doubling until the sampled
  // containment / convergence / pullback checks pass.
  const double w_range = 40.0;
  double b = std::max(1.0, 1.5 * std::pow(c0_ / radius_, m / 2.0));
  for (int attempt = 0; attempt < 40; ++attempt) {
    b_ = b;
    if (even()) {
      while (std::abs(c_param_) / (b_ * std::cos(eps_)) > 0.25) b_ *= 2.0;
      d_ = 1.0 + 2.0 * std::abs(c_param_) *
                     (kSectorPi + std::log(2.0 + b_ + 2.0 * w_range));
    }
    bool ok = true;
    try {
      for (double im : {0.2, 1.0, 4.0, 12.0, w_range}) {
        for (int i = -4; i <= 4 && ok; ++i) {
          const Complex w(i * w_range / 4.0, im);
          const Complex z = map(w);
          if (!(std::abs(z) < 0.98 * radius_)) ok = false;
          if (ok && pullback_residual(w) > 1e-6) ok = false;
        }
        if (!ok) break;
      }
    } catch (const NewtonDivergence&) {
      ok = false;
    }
    if (ok) return;
    b *= 2.0;
  }
  throw NewtonDivergence("NaturalChart: auto-tuning of B, D failed");
}

Complex NaturalChart::psi_map(Complex x) const {
  const Complex shifted = x + Complex(0.0, b_);
  if (shifted.imag() <= 0.0)
    throw std::invalid_argument("NaturalChart: point below the shifted branch cut");
  const double m = n_ - 2;
  return c0_ * rot_ * std::exp(-(2.0 / m) * std::log(shifted));
}

Complex NaturalChart::invert_f(Complex target) const {
  // F(x) = x + C Log(x + iB); near-identity by the tuning of B.
  Complex x = target - Complex(0.0, d_);
  for (int it = 0; it < 50; ++it) {
    const Complex shifted = x + Complex(0.0, b_);
    const Complex fx = x + c_param_ * std::log(shifted) - target;
    if (std::abs(fx) < 1e-12) {
      if (!in_sector_eps(x + Complex(0.0, 1e-14), eps_))
        throw NewtonDivergence("NaturalChart: inversion left the extended sector");
      return x;
    }
    const Complex fp = 1.0 + c_param_ / shifted;
    x -= fx / fp;
  }
  throw NewtonDivergence(
      "NaturalChart: Newton inversion did not converge (B, D too small)");
}

Complex NaturalChart::map(Complex w) const {
  if (!(w.imag() > 0.0))
    throw std::invalid_argument("NaturalChart::map: requires Im(w) > 0");
  if (!even()) return psi_map(w);
  const Complex x = invert_f(w + Complex(0.0, d_));
  return psi_map(x);
}

Complex NaturalChart::map_derivative(Complex w, double fd_step) const {
  const Complex h(fd_step, 0.0);
  return (map(w + h) - map(w - h)) / (2.0 * fd_step);
}

double NaturalChart::pullback_residual(Complex w, double fd_step) const {
  const Complex dz = map_derivative(w, fd_step);
  PoleModel model = even() ? PoleModel::normal_form(n_, a_param_, radius_)
                           : PoleModel::normal_form(n_, 0.0, radius_);
  const Complex pulled = dz * dz * eval_q(model, map(w));
  return std::abs(pulled - 1.0);
}

std::optional<Complex> NaturalChart::inverse(Complex z, double slack) const {
  if (std::abs(z) == 0.0 || std::abs(z) >= radius_) return std::nullopt;
  const double m = n_ - 2;
  const Complex zeta = z / (c0_ * rot_);
  // Branch: reduce arg(zeta) into [-2 pi/m - slack, slack].
  double a = std::arg(zeta);
  const double lo = -2.0 * kSectorPi / m - slack;
  while (a > slack) a -= 2.0 * kSectorPi;
  while (a < lo) a += 2.0 * kSectorPi;
  if (a > slack) return std::nullopt;  // sector width exceeded by wrapping
  const Complex x =
      std::pow(std::abs(zeta), -m / 2.0) * std::exp(Complex(0.0, -a * m / 2.0)) -
      Complex(0.0, b_);
  if (!even()) return x;
  const Complex shifted = x + Complex(0.0, b_);
  if (shifted == Complex(0.0, 0.0)) return std::nullopt;
  return x + c_param_ * std::log(shifted) - Complex(0.0, d_);
}

bool NaturalChart::contains(Complex z, double slack) const {
  const auto w = inverse(z, slack);
  return w.has_value() && w->imag() >= -1e-12;
}

double NaturalChart::ray_radius(double psi) const {
  double lo = 0.0, hi = radius_ * 0.999;
  const Complex dir(std::cos(psi), std::sin(psi));
  if (contains(hi * dir)) return hi;
  // The image pinches towards the sector edges; bisect the largest radius.
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (contains(mid * dir))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::vector<NaturalChart> natural_charts(const PoleModel& model) {
  std::vector<NaturalChart> charts;
  charts.reserve(model.num_charts());
  for (int k = 1; k <= model.num_charts(); ++k) charts.emplace_back(model, k);
  return charts;
}

QdSpaceDims qd_space_dims(int euler_char, const std::vector<int>& pole_orders) {
  if (euler_char >= 0)
    throw std::invalid_argument("qd_space_dims: requires chi < 0");
  int sum = 0;
  for (int n : pole_orders) {
    if (n < 1) throw std::invalid_argument("qd_space_dims: pole order must be >= 1");
    sum += n;
  }
  QdSpaceDims d;
  d.total = 3 * std::abs(euler_char) + 2 * sum;
  d.circle_params = static_cast<int>(pole_orders.size());
  d.real_params = d.total - d.circle_params;
  return d;
}

int crowned_teich_dim(int genus, const std::vector<int>& cusp_counts) {
  if (genus < 1) throw std::invalid_argument("crowned_teich_dim: genus must be >= 1");
  if (cusp_counts.empty())
    throw std::invalid_argument("crowned_teich_dim: need at least one crown");
  int n = 6 * genus - 6;
  for (int m : cusp_counts) {
    if (m < 1) throw std::invalid_argument("crowned_teich_dim: cusp count must be >= 1");
    n += m + 3;
  }
  return n;
}

}  // namespace adsmax
