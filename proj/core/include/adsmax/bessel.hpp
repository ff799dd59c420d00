#pragma once

// Modified Bessel function I0, overflow-guarded through its logarithm.

namespace adsmax {

// log I0(x) for x >= 0; power series below the switch point, asymptotic
// expansion e^x / sqrt(2 pi x) (1 + 1/(8x) + ...) above it.
double log_bessel_i0(double x);

double bessel_i0(double x);

// h(s) = I0(2 sqrt(2) s) / I0(2 sqrt(2) r): the radial solution of
// Laplacian(h) = 8 h with h = 1 on the circle of radius r.
// Requires 0 <= s <= r.
double bessel_supersolution(double r, double s);

}  // namespace adsmax
