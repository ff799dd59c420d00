#pragma once

// Local models of meromorphic quadratic differentials near a pole of order
// n >= 3: principal-part evaluation, the flat metric |q|, the n-2 natural
// half-plane charts, and dimension counts for the relevant moduli spaces.

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace adsmax {

using Complex = std::complex<double>;

// q(z) dz^2 = (a_n / z^n + ... + a_2 / z^2) dz^2 on a punctured disc
// {0 < |z| < radius}.
struct PoleModel {
  int order = 3;                  // n >= 3
  std::vector<Complex> coeffs;    // a_n, a_{n-1}, ..., a_2  (size n-1)
  double radius = 1.0;

  // Normal forms used by the chart construction:
  //   odd n:   q = z^{-n}
  //   even n:  q = (z^{-n/2} + A z^{-1})^2 = z^{-n} + 2A z^{-n/2-1} + A^2 z^{-2}
  static PoleModel normal_form(int order, Complex residue_param = 0.0, double radius = 1.0);

  void validate() const;  // throws std::invalid_argument on bad data
  int num_charts() const { return order - 2; }
  bool is_normal_form(double tol = 1e-12) const;
  // Residue-type parameter A of an even-order normal form.
  Complex even_residue_param() const;
};

// Principal part value. Throws std::invalid_argument at z = 0.
Complex eval_q(const PoleModel& model, Complex z);

// Density |q(z)| of the flat metric |q| = |q(z)| |dz|^2.
double flat_density(const PoleModel& model, Complex z);

// |q|-length of the circle |z| = rho by composite quadrature.
double flat_circle_length(const PoleModel& model, double rho, int n_samples = 4096);

struct NewtonDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One of the n-2 natural coordinates of a normal-form pole model: a map
// Phi_k from the upper half-plane into the punctured chart neighbourhood
// with pullback Phi_k^* q = d omega^2.
//
// Odd order:  Phi_k(w) = c0 * exp(-(2/(n-2)) Log(w + iB) + 2 k pi i/(n-2)),
//             c0 = ((n-2)/2)^{-2/(n-2)}.
// Even order: Phi_k = Psi_k o phi with Psi_k as above (on a slightly larger
//             sector) and phi(w) = F^{-1}(w + iD), F(x) = x + C Log(x + iB),
//             C = (-1)^k 2A/(n-2).
class NaturalChart {
 public:
  NaturalChart(const PoleModel& model, int index);  // index in 1..n-2

  int index() const { return k_; }
  int order() const { return n_; }
  bool even() const { return n_ % 2 == 0; }
  double B() const { return b_; }
  double D() const { return d_; }
  Complex C() const { return c_param_; }
  double epsilon() const { return eps_; }

  // Forward map; requires Im(w) > 0. Even order uses a Newton inversion of F
  // (analytic derivative F'(x) = 1 + C/(x+iB), initial guess the target
  // shifted by -iD, max 50 iterations, tolerance 1e-12) and throws
  // NewtonDivergence if it fails to converge.
  Complex map(Complex w) const;

  // d Phi_k / d omega by central complex differences.
  Complex map_derivative(Complex w, double fd_step = 1e-6) const;

  // |(Phi_k')^2 q(Phi_k) - 1| at w; the pullback identity residual.
  double pullback_residual(Complex w, double fd_step = 1e-6) const;

  // Inverse with branch selected by the chart sector, accepting arguments
  // within `slack` radians beyond the closed sector. Returns nullopt when z
  // is outside the (slack-enlarged) sector or outside the image.
  std::optional<Complex> inverse(Complex z, double slack = 0.0) const;

  // Membership in the closure of the image, with angular slack.
  bool contains(Complex z, double slack = 0.0) const;

  // Largest radius at which the ray of argument psi stays inside the image.
  double ray_radius(double psi) const;

  // Sector of the chart: arguments in (sector_end - sector_width, sector_end).
  double sector_end() const { return 2.0 * kSectorPi * k_ / (n_ - 2); }
  double sector_width() const { return 2.0 * kSectorPi / (n_ - 2); }

 private:
  static constexpr double kSectorPi = 3.141592653589793238462643383279502884;

  Complex psi_map(Complex x) const;      // the odd-order formula, any sector point
  Complex invert_f(Complex target) const;  // Newton solve of F(x) = target

  int n_ = 3;
  int k_ = 1;
  double radius_ = 1.0;
  double c0_ = 1.0;
  Complex rot_ = 1.0;   // e^{2 k pi i/(n-2)}
  double b_ = 1.0;      // B
  Complex a_param_ = 0.0;
  Complex c_param_ = 0.0;  // C (even order only)
  double d_ = 0.0;         // D (even order only)
  double eps_ = 0.15;      // sector enlargement for the even-order domain
};

// Auto-tunes B (and D for even order) by doubling until containment in
// {|z| < radius}, Newton convergence, and sampled injectivity hold, and
// returns all n-2 charts.
std::vector<NaturalChart> natural_charts(const PoleModel& model);

// Real dimension of the space of meromorphic quadratic differentials with
// poles of order at most the given bounds on a closed surface of Euler
// characteristic chi < 0: d = 3|chi| + 2 sum(n_i). The space with the exact
// orders is R^{d-N} x (S^1)^N.
struct QdSpaceDims {
  int total = 0;
  int real_params = 0;   // d - N
  int circle_params = 0; // N
};
QdSpaceDims qd_space_dims(int euler_char, const std::vector<int>& pole_orders);

// dim Teich(crowned surface) = 6 tau - 6 + sum_i (m_i + 3), tau >= 1, b >= 1
// boundary components with m_i >= 1 boundary cusps each.
int crowned_teich_dim(int genus, const std::vector<int>& cusp_counts);

}  // namespace adsmax
