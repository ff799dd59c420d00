#include "adsmax/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace adsmax {

namespace {
constexpr double kTwoPiLocal = 6.283185307179586476925286766559;
}

double log_bessel_i0(double x) {
  if (x < 0.0) throw std::invalid_argument("log_bessel_i0: x must be >= 0");
  if (x < 21.0) {
    // sum_k (x^2/4)^k / (k!)^2
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 120; ++k) {
      term *= q / (double(k) * k);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return std::log(sum);
  }
  // I0(x) ~ e^x / sqrt(2 pi x) * sum_k a_k / x^k, a_k = ((2k-1)!!)^2 / (k! 8^k)
  double ak = 1.0, sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    const double odd = 2.0 * k - 1.0;
    ak *= odd * odd / (8.0 * k);
    sum += ak / std::pow(x, k);
  }
  return x - 0.5 * std::log(kTwoPiLocal * x) + std::log(sum);
}

double bessel_i0(double x) { return std::exp(log_bessel_i0(x)); }

double bessel_supersolution(double r, double s) {
  if (!(r > 0.0)) throw std::invalid_argument("bessel_supersolution: r must be > 0");
  if (s < 0.0 || s > r)
    throw std::invalid_argument("bessel_supersolution: requires 0 <= s <= r");
  const double c = 2.0 * std::sqrt(2.0);
  return std::exp(log_bessel_i0(c * s) - log_bessel_i0(c * r));
}

}  // namespace adsmax
