#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace wpstab {

// Point of the Siegel upper half-space: symmetric g x g complex matrix with
// positive definite imaginary part. Validated on construction.
class SiegelPoint {
 public:
  explicit SiegelPoint(Eigen::MatrixXcd m);

  int g() const { return int(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Eigen::MatrixXd imag() const { return m_.imag(); }

 private:
  Eigen::MatrixXcd m_;
};

// Integer symplectic block matrix [[A, B], [C, D]]; gamma^T J gamma = J is
// checked in exact integer arithmetic.
struct SymplecticElement {
  using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IntMatrix a, b, c, d;

  static SymplecticElement identity(int g);
  static SymplecticElement inversion(int g);  // [[0, -I], [I, 0]]
  static SymplecticElement translation(const IntMatrix& s);  // [[I, S], [0, I]]

  int g() const { return int(a.rows()); }
  SymplecticElement operator*(const SymplecticElement& rhs) const;
  void validate() const;
};

// omega = rho e1 + tau e2 + sigma e3 -> [[rho, sigma], [sigma, tau]];
// domain error when the imaginary part is not positive definite.
SiegelPoint omega_to_M(std::complex<double> rho, std::complex<double> tau,
                       std::complex<double> sigma);

// K(M, N) = -tr log(-i (M - conj(N))), principal matrix logarithm.
std::complex<double> bergman_kernel(const SiegelPoint& m, const SiegelPoint& n);

// K(M) = K(M, M) = -tr log(2 Im M) = -log det(2 Im M).
double bergman_potential(const SiegelPoint& m);

// (A M + B)(C M + D)^{-1}, re-symmetrized; warns via exception on excessive
// symmetry drift or a near-singular denominator.
SiegelPoint sp_action(const SymplecticElement& gamma, const SiegelPoint& m);

// | K(gamma M) - K(M) - 2 log |det(C M + D)| |.
double bergman_transform_law(const SymplecticElement& gamma, const SiegelPoint& m);

// Word of length <= max_len in the generators J and [[I, S], [0, I]] with
// small random symmetric integer S. Exact integer entries, no rejection.
SymplecticElement random_symplectic(int g, std::mt19937_64& rng, int max_len = 6);

}  // namespace wpstab
