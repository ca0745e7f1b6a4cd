#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace wpstab {

// Scalar potential on a chart of m complex coordinates with a domain guard.
struct ChartedPotential {
  int arity = 0;
  std::function<double(const std::vector<std::complex<double>>&)> eval;
  std::function<bool(const std::vector<std::complex<double>>&)> guard;

  static ChartedPotential unguarded(
      int arity, std::function<double(const std::vector<std::complex<double>>&)> eval);
};

struct HermitianForm {
  Eigen::MatrixXcd g;
  double hermiticity_drift = 0.0;  // before symmetrization

  int dim() const { return int(g.rows()); }
};

// g_{a bbar} = d^2 f / dz_a dzbar_b via central second differences in the
// real coordinates, step h scaled by max(1, |coordinate|) per axis;
// Hermitian-symmetrized.
HermitianForm complex_hessian(const ChartedPotential& f,
                              const std::vector<std::complex<double>>& p, double h);

enum class PositivityVerdict { positive_definite, degenerate, indefinite };

struct PositivityReport {
  PositivityVerdict verdict;
  Eigen::VectorXd eigenvalues;
};

PositivityReport positivity_check(const HermitianForm& g, double tol);

// Scalar curvature R = -(2/g) d dbar log g for a one-coordinate chart; the
// outer differences run at 10x the inner step.
double curvature_1d(const ChartedPotential& f, std::complex<double> p, double h);

}  // namespace wpstab
