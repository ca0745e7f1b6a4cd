#include "wpstab/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpstab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double riemann_zeta(int s) {
  if (s < 2) throw std::domain_error("riemann_zeta: argument must be >= 2");
  static const double table[] = {
      1.6449340668482264365,  // zeta(2)
      1.2020569031595942854,  // zeta(3)
      1.0823232337111381916,  // zeta(4)
      1.0369277551433699263,  // zeta(5)
      1.0173430619844491397,  // zeta(6)
      1.0083492773819228268,  // zeta(7)
      1.0040773561979443394,  // zeta(8)
      1.0020083928260822144,  // zeta(9)
      1.0009945751278180853,  // zeta(10)
      1.0004941886041194646,  // zeta(11)
      1.0002460865533080483,  // zeta(12)
      1.0001227133475784891,  // zeta(13)
      1.0000612481350587048,  // zeta(14)
      1.0000305882363070205,  // zeta(15)
  };
  if (s <= 15) return table[s - 2];
  const int N = 40;
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(double(n), -double(s));
  // Euler-Maclaurin tail from N; next correction is O(s^3 N^{-s-3}).
  const double Ns = std::pow(double(N), -double(s));
  sum += Ns * N / (s - 1.0) + 0.5 * Ns + s / 12.0 * Ns / N;
  return sum;
}

std::complex<double> complex_gamma(std::complex<double> z) {
  static const double c[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> acc = c[0];
  for (int k = 1; k < 9; ++k) acc += c[k] / (z + double(k));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

std::vector<double> series_exp(const std::vector<double>& a) {
  if (a.empty() || a[0] != 0.0)
    throw std::invalid_argument("series_exp: constant term must vanish");
  const std::size_t n = a.size();
  std::vector<double> b(n, 0.0);
  b[0] = 1.0;
  for (std::size_t m = 1; m < n; ++m) {
    double s = 0.0;
    for (std::size_t k = 1; k <= m; ++k) s += double(k) * a[k] * b[m - k];
    b[m] = s / double(m);
  }
  return b;
}

std::vector<double> series_log(const std::vector<double>& f) {
  if (f.empty() || f[0] != 1.0)
    throw std::invalid_argument("series_log: constant term must be 1");
  const std::size_t n = f.size();
  std::vector<double> l(n, 0.0);
  for (std::size_t m = 1; m < n; ++m) {
    double s = f[m];
    for (std::size_t k = 1; k < m; ++k) s -= double(k) / double(m) * l[k] * f[m - k];
    l[m] = s;
  }
  return l;
}

double series_eval(const std::vector<double>& coeffs, double z) {
  double v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
  return v;
}

SeriesTable SeriesTable::make(int order) {
  if (order < 1) throw std::invalid_argument("SeriesTable: order must be >= 1");
  SeriesTable t;
  t.order = order;
  const std::size_t n = std::size_t(order) + 1;

  std::vector<double> log_td(n, 0.0);
  log_td[1] = 0.5;
  for (int j = 1; 2 * j <= order; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    log_td[2 * j] = sign * riemann_zeta(2 * j) / (j * std::pow(kTwoPi, 2 * j));
  }
  t.td = series_exp(log_td);

  std::vector<double> half(log_td);
  for (double& x : half) x *= 0.5;
  t.sqrt_td = series_exp(half);

  t.log_gamma.assign(n, 0.0);
  t.log_gamma[1] = kEulerGamma / kTwoPi;
  for (int j = 1; 2 * j + 1 <= order; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    t.log_gamma[2 * j + 1] =
        sign * riemann_zeta(2 * j + 1) / ((2 * j + 1) * std::pow(kTwoPi, 2 * j + 1));
  }
  return t;
}

}  // namespace wpstab
