#pragma once

// Numerical integration of the frame field ODE dF = F (U dw + V dbar{w})
// along polyline paths, and extraction / validation of the embedding from
// the frame columns (v1, v2, N, sigma).

#include "adsmax/connection.hpp"
#include "adsmax/geometry.hpp"
#include "adsmax/horospherical.hpp"

#include <vector>

namespace adsmax {

struct FrameSample {
  double t = 0.0;  // arc-length parameter along the path
  Cplx w;
  Matrix4cd F;
};

struct FrameField {
  std::vector<FrameSample> samples;
  double unitarity_drift = 0.0;  // sup ||F^H J F - J||_max
  double reality_drift = 0.0;    // sup |Im| over the N and sigma columns
  double step = 0.0;             // step actually used (after any halvings)

  const Matrix4cd& endpoint() const { return samples.back().F; }
};

struct IntegrateOptions {
  double step = 1e-3;
  double drift_budget = 1e-6;  // per integration; halve the step when exceeded
  int max_step_halvings = 3;
  int store_every = 10;  // sample retention stride (endpoint always kept)
};

// RK4 along the polyline. Throws std::invalid_argument for paths with fewer
// than two points; throws std::runtime_error when the drift budget is still
// exceeded after the allowed step halvings.
FrameField integrate_frame(const std::vector<Cplx>& polyline, const ConnectionSource& src,
                           const Matrix4cd& F_init, const IntegrateOptions& opts = {});

struct EmbeddingPath {
  std::vector<double> t;
  std::vector<Cplx> w;
  std::vector<SplitVector4> sigma;
  std::vector<SplitVector4> normal;
  double max_quadric_defect = 0.0;   // sup |<sigma,sigma> + 1|
  double max_metric_defect = 0.0;    // sup |<dsigma,dsigma> - 2 e^{2phi}|w'|^2|
  double max_q_defect = 0.0;         // sup |recovered q - q(w)|
};

// Strips the real embedding and normal from the frame samples after a
// reality check, and verifies the first/second fundamental data along the
// path by finite differences:
//   <sigma', sigma'> = 2 e^{2 phi} |w'|^2   and   q = e^{phi} <N', v2> / w'.
// Throws std::runtime_error when the reality drift exceeds reality_tol.
EmbeddingPath extract_embedding(const FrameField& field, const ConnectionSource& src,
                                double reality_tol = 1e-6);

}  // namespace adsmax
