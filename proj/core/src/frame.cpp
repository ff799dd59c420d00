#include "adsmax/frame.hpp"

#include <cmath>
#include <stdexcept>

namespace adsmax {

namespace {

Matrix4cd rhs(const ConnectionSource& src, Cplx w, Cplx wdot, const Matrix4cd& F) {
  const ConnectionSample c = connection_at(src.jet(w), src.q(w));
  return F * (c.U * wdot + c.V * std::conj(wdot));
}

double unitarity_defect(const Matrix4cd& F) {
  const Eigen::Matrix4d& J = split_form_matrix();
  const Matrix4cd d = F.adjoint() * J * F - J.cast<Cplx>();
  return d.cwiseAbs().maxCoeff();
}

double reality_defect(const Matrix4cd& F) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int c = 2; c < 4; ++c) m = std::max(m, std::abs(F(i, c).imag()));
  return m;
}

}  // namespace

FrameField integrate_frame(const std::vector<Cplx>& polyline, const ConnectionSource& src,
                           const Matrix4cd& F_init, const IntegrateOptions& opts) {
  if (polyline.size() < 2)
    throw std::invalid_argument("integrate_frame: need at least two path points");

  double step = opts.step;
  for (int attempt = 0; attempt <= opts.max_step_halvings; ++attempt) {
    FrameField out;
    out.step = step;
    Matrix4cd F = F_init;
    double t = 0.0;
    int count = 0;
    out.samples.push_back({t, polyline.front(), F});
    bool budget_ok = true;

    for (size_t leg = 0; leg + 1 < polyline.size() && budget_ok; ++leg) {
      const Cplx a = polyline[leg], b = polyline[leg + 1];
      const double len = std::abs(b - a);
      if (len == 0.0) continue;
      const Cplx dir = (b - a) / len;
      const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
      const double hstep = len / n;
      for (int k = 0; k < n; ++k) {
        const Cplx w0 = a + dir * (hstep * k);
        const Matrix4cd k1 = rhs(src, w0, dir, F);
        const Matrix4cd k2 = rhs(src, w0 + dir * (0.5 * hstep), dir, F + 0.5 * hstep * k1);
        const Matrix4cd k3 = rhs(src, w0 + dir * (0.5 * hstep), dir, F + 0.5 * hstep * k2);
        const Matrix4cd k4 = rhs(src, w0 + dir * hstep, dir, F + hstep * k3);
        F += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += hstep;
        ++count;
        const Cplx w_now = a + dir * (hstep * (k + 1));
        if (count % opts.store_every == 0 || (leg + 2 == polyline.size() && k + 1 == n))
          out.samples.push_back({t, w_now, F});
        if (count % 64 == 0) {
          // Normalised drift monitors; the raw defect scales with ||F||^2.
          const double scale = std::max(1.0, F.cwiseAbs().maxCoeff());
          const double u = unitarity_defect(F) / (scale * scale);
          const double r = reality_defect(F) / scale;
          out.unitarity_drift = std::max(out.unitarity_drift, u);
          out.reality_drift = std::max(out.reality_drift, r);
          if (std::max(u, r) > opts.drift_budget) {
            budget_ok = false;
            break;
          }
        }
      }
    }
    if (budget_ok) {
      const double scale = std::max(1.0, F.cwiseAbs().maxCoeff());
      out.unitarity_drift =
          std::max(out.unitarity_drift, unitarity_defect(F) / (scale * scale));
      out.reality_drift = std::max(out.reality_drift, reality_defect(F) / scale);
      if (out.samples.back().t != t) out.samples.push_back({t, polyline.back(), F});
      return out;
    }
    step *= 0.5;
  }
  throw std::runtime_error("integrate_frame: drift budget exceeded after step halvings");
}

EmbeddingPath extract_embedding(const FrameField& field, const ConnectionSource& src,
                                double reality_tol) {
  EmbeddingPath out;
  const size_t n = field.samples.size();
  if (n < 3) throw std::invalid_argument("extract_embedding: too few samples");

  for (const FrameSample& s : field.samples) {
    const double scale = std::max(1.0, s.F.cwiseAbs().maxCoeff());
    if (reality_defect(s.F) / scale > reality_tol)
      throw std::runtime_error("extract_embedding: reality drift beyond tolerance");
    out.t.push_back(s.t);
    out.w.push_back(s.w);
    out.sigma.push_back(s.F.col(3).real());
    out.normal.push_back(s.F.col(2).real());
    out.max_quadric_defect = std::max(
        out.max_quadric_defect,
        std::abs(bilinear_form(out.sigma.back(), out.sigma.back()) + 1.0));
  }

  // First/second fundamental data by fourth-order centred differences in the
  // path parameter. Stencils that straddle a polyline corner or a non-uniform
  // sample stride are skipped.
  for (size_t k = 2; k + 2 < n; ++k) {
    const double dt = out.t[k + 1] - out.t[k];
    if (dt <= 0.0) continue;
    bool uniform = true;
    for (int o = -2; o < 2; ++o)
      if (std::abs(out.t[k + o + 1] - out.t[k + o] - dt) > 1e-12 * std::max(1.0, dt))
        uniform = false;
    if (!uniform) continue;
    const Cplx wdot1 = (out.w[k + 1] - out.w[k - 1]) / (2.0 * dt);
    const Cplx wdot2 = (out.w[k + 2] - out.w[k - 2]) / (4.0 * dt);
    if (std::abs(wdot1 - wdot2) > 1e-9 || std::abs(wdot1) < 1e-12) continue;  // corner

    auto d4 = [&](auto get) {
      return (-get(k + 2) + 8.0 * get(k + 1) - 8.0 * get(k - 1) + get(k - 2)) /
             (12.0 * dt);
    };
    const SplitVector4 sdot = d4([&](size_t i) { return out.sigma[i]; });
    const double phi = src.jet(out.w[k]).phi;
    const double metric = bilinear_form(sdot, sdot);
    out.max_metric_defect =
        std::max(out.max_metric_defect,
                 std::abs(metric - 2.0 * std::exp(2.0 * phi) * std::norm(wdot1)));

    // q = e^{phi} <N', v2> / w' with v2 the second frame column.
    const Eigen::Vector4cd ndot =
        d4([&](size_t i) { return Eigen::Vector4cd(field.samples[i].F.col(2)); });
    const Eigen::Vector4cd v2 = field.samples[k].F.col(1);
    const Cplx q_rec = std::exp(phi) * hermitian_form(ndot, v2) / wdot1;
    out.max_q_defect = std::max(out.max_q_defect, std::abs(q_rec - src.q(out.w[k])));
  }
  return out;
}

}  // namespace adsmax
