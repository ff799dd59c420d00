#pragma once

// The flat-connection coefficient matrices of a conformal maximal embedding.
// In a conformal coordinate w with induced metric 2 e^{2 phi} |dw|^2 and
// second fundamental form Re(2 q dw^2), the pulled-back ambient connection
// in the frame (v1, v2, N, sigma) is  U dw + V dbar{w}  with
//
//   U = [ phi_w      0        0         e^phi ]      V = [ -phi_wb   0        e^{-phi} qb   0     ]
//       [ 0         -phi_w    q e^-phi  0     ]          [ 0         phi_wb   0             e^phi ]
//       [ q e^-phi   0        0         0     ]          [ 0         e^{-phi} qb  0         0     ]
//       [ 0          e^phi    0         0     ]          [ e^phi     0        0             0     ]
//
// and the connection is flat exactly when (1/2) Lap phi = e^{2 phi} - e^{-2 phi} |q|^2.

#include "adsmax/grid.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <memory>

namespace adsmax {

using Matrix4cd = Eigen::Matrix4cd;
using Cplx = std::complex<double>;

struct PhiJet {
  double phi = 0.0;
  Cplx phi_w{0.0, 0.0};
  Cplx phi_wbar{0.0, 0.0};
};

struct ConnectionSample {
  Matrix4cd U;
  Matrix4cd V;
};

ConnectionSample connection_at(const PhiJet& jet, Cplx q);

// Evaluation source for the conformal factor jet and the differential along
// integration paths.
class ConnectionSource {
 public:
  virtual ~ConnectionSource() = default;
  virtual PhiJet jet(Cplx w) const = 0;
  virtual Cplx q(Cplx w) const = 0;
};

// phi identically zero, q constant (the horospherical connection for q = 1).
class ConstantSource : public ConnectionSource {
 public:
  explicit ConstantSource(Cplx q = Cplx(1.0, 0.0)) : q_(q) {}
  PhiJet jet(Cplx) const override { return {}; }
  Cplx q(Cplx) const override { return q_; }

 private:
  Cplx q_;
};

// phi(w) = amplitude * e^{-2 sqrt(2) r} / sqrt(r), r = sqrt(|w|^2 + 1),
// with the analytic jet; q = 1. A synthetic conformal factor with the decay
// rate of a true solution on a natural chart.
class SyntheticDecaySource : public ConnectionSource {
 public:
  explicit SyntheticDecaySource(double amplitude) : a_(amplitude) {}
  PhiJet jet(Cplx w) const override;
  Cplx q(Cplx w) const override;
  double phi(Cplx w) const;

 private:
  double a_;
};

// Bilinear interpolation of a grid field; first derivatives from centred
// differences of the grid values, interpolated bilinearly.
class GridSource : public ConnectionSource {
 public:
  GridSource(GridDomain domain, Field phi, Cplx q_constant = Cplx(1.0, 0.0));
  PhiJet jet(Cplx w) const override;
  Cplx q(Cplx) const override { return q_; }

 private:
  GridDomain domain_;
  Field phi_, phi_x_, phi_y_;
  Cplx q_;
};

// Norm of the discrete curvature d_wbar(U) - d_w(V) + [U, V] at w, with the
// coefficient matrices sampled from the source on a centred stencil of
// width fd_step. Bounded by C (PDE residual + fd_step^2) for fields that
// discretely solve the vortex equation.
double flatness_residual(const ConnectionSource& src, Cplx w, double fd_step);

}  // namespace adsmax
