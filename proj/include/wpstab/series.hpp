#pragma once

#include <complex>
#include <vector>

namespace wpstab {

// Named constants, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta5 = 1.0369277551433699263;
inline constexpr double kZeta7 = 1.0083492773819228268;

// zeta(s) for integer s >= 2. Tabulated through s = 15, direct summation
// with an Euler-Maclaurin tail above that.
double riemann_zeta(int s);

// Gamma function on the complex plane (Lanczos, g = 7, 9 terms; reflection
// for Re z < 0.5). Accurate to ~1e-13 relative in double precision.
std::complex<double> complex_gamma(std::complex<double> z);

// One-variable coefficient tables, index = power of z:
//   td:        z/(1 - e^{-z})
//   sqrt_td:   its square root
//   log_gamma: Lambda(z) = Im log Gamma(1 + z/(2 pi i)), odd powers only
//
// Built from the log-series log Td(z) = z/2 + sum_j (-1)^j zeta(2j) z^{2j} /
// (j (2 pi)^{2j}), which keeps every coefficient accurate at high order where
// the naive reciprocal recurrence loses all relative precision.
struct SeriesTable {
  int order = 0;
  std::vector<double> td;
  std::vector<double> sqrt_td;
  std::vector<double> log_gamma;

  static SeriesTable make(int order);
};

// exp of a series with a[0] == 0; log of a series with f[0] == 1.
std::vector<double> series_exp(const std::vector<double>& a);
std::vector<double> series_log(const std::vector<double>& f);

double series_eval(const std::vector<double>& coeffs, double z);

}  // namespace wpstab
