#include "adsmax/connection.hpp"

#include <cmath>

namespace adsmax {

ConnectionSample connection_at(const PhiJet& jet, Cplx q) {
  const double ep = std::exp(jet.phi);
  const double em = std::exp(-jet.phi);
  const Cplx qb = std::conj(q);
  ConnectionSample s;
  s.U.setZero();
  s.V.setZero();
  s.U(0, 0) = jet.phi_w;
  s.U(1, 1) = -jet.phi_w;
  s.U(0, 3) = ep;
  s.U(1, 2) = q * em;
  s.U(2, 0) = q * em;
  s.U(3, 1) = ep;
  s.V(0, 0) = -jet.phi_wbar;
  s.V(1, 1) = jet.phi_wbar;
  s.V(0, 2) = qb * em;
  s.V(1, 3) = ep;
  s.V(2, 1) = qb * em;
  s.V(3, 0) = ep;
  return s;
}

PhiJet SyntheticDecaySource::jet(Cplx w) const {
  const double r = std::sqrt(std::norm(w) + 1.0);
  const double p = phi(w);
  // d phi / dr = (-2 sqrt(2) - 1/(2r)) phi;  dr/dw = conj(w) / (2 r).
  const Cplx dr_dw = std::conj(w) / (2.0 * r);
  const double dphi_dr = (-2.0 * std::sqrt(2.0) - 0.5 / r) * p;
  PhiJet j;
  j.phi = p;
  j.phi_w = dphi_dr * dr_dw;
  j.phi_wbar = std::conj(j.phi_w);
  return j;
}

Cplx SyntheticDecaySource::q(Cplx) const { return Cplx(1.0, 0.0); }

double SyntheticDecaySource::phi(Cplx w) const {
  const double r = std::sqrt(std::norm(w) + 1.0);
  return a_ * std::exp(-2.0 * std::sqrt(2.0) * r) / std::sqrt(r);
}

GridSource::GridSource(GridDomain domain, Field phi, Cplx q_constant)
    : domain_(std::move(domain)), phi_(std::move(phi)), q_(q_constant) {
  phi_x_ = Field(phi_.nx, phi_.ny);
  phi_y_ = Field(phi_.nx, phi_.ny);
  const double inv2h = 0.5 / domain_.h;
  for (int j = 0; j < phi_.ny; ++j)
    for (int i = 0; i < phi_.nx; ++i) {
      const int il = std::max(i - 1, 0), ir = std::min(i + 1, phi_.nx - 1);
      const int jl = std::max(j - 1, 0), jr = std::min(j + 1, phi_.ny - 1);
      // centred inside, one-sided on the frame
      phi_x_.at(i, j) = (phi_.at(ir, j) - phi_.at(il, j)) / ((ir - il) * domain_.h);
      phi_y_.at(i, j) = (phi_.at(i, jr) - phi_.at(i, jl)) / ((jr - jl) * domain_.h);
      (void)inv2h;
    }
}

PhiJet GridSource::jet(Cplx w) const {
  PhiJet j;
  j.phi = phi_.interp(domain_, w.real(), w.imag());
  const double px = phi_x_.interp(domain_, w.real(), w.imag());
  const double py = phi_y_.interp(domain_, w.real(), w.imag());
  j.phi_w = 0.5 * Cplx(px, -py);
  j.phi_wbar = 0.5 * Cplx(px, py);
  return j;
}

double flatness_residual(const ConnectionSource& src, Cplx w, double fd_step) {
  const double h = fd_step;
  auto U_at = [&](Cplx z) { return connection_at(src.jet(z), src.q(z)).U; };
  auto V_at = [&](Cplx z) { return connection_at(src.jet(z), src.q(z)).V; };
  // d/dwbar = (d/dx + i d/dy)/2, d/dw = (d/dx - i d/dy)/2 by centred differences
  const Matrix4cd Ux = (U_at(w + h) - U_at(w - h)) / (2.0 * h);
  const Matrix4cd Uy = (U_at(w + Cplx(0, h)) - U_at(w - Cplx(0, h))) / (2.0 * h);
  const Matrix4cd Vx = (V_at(w + h) - V_at(w - h)) / (2.0 * h);
  const Matrix4cd Vy = (V_at(w + Cplx(0, h)) - V_at(w - Cplx(0, h))) / (2.0 * h);
  const Matrix4cd dUdwbar = 0.5 * (Ux + Cplx(0, 1) * Uy);
  const Matrix4cd dVdw = 0.5 * (Vx - Cplx(0, 1) * Vy);
  // With the right action dF = F (U dw + V dwbar), flatness reads
  // d_wbar U - d_w V + VU - UV = 0; the (1,1) entry is the vortex PDE defect.
  const ConnectionSample c = connection_at(src.jet(w), src.q(w));
  const Matrix4cd curv = dUdwbar - dVdw + c.V * c.U - c.U * c.V;
  return curv.cwiseAbs().maxCoeff();
}

}  // namespace adsmax
