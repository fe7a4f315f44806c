#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace opuc {

using cx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_finite(cx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Principal argument mapped to [0, 2*pi).
inline double arg2pi(cx z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

inline cx unit(double theta) { return cx(std::cos(theta), std::sin(theta)); }

}  // namespace opuc
