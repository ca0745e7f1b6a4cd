#include "wpstab/siegel.hpp"

#include <cmath>
#include <stdexcept>

namespace wpstab {

namespace {

using IntMatrix = SymplecticElement::IntMatrix;

Eigen::MatrixXd require_spd_imag(const Eigen::MatrixXcd& m, const char* who) {
  const Eigen::MatrixXd y = m.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
  if (es.info() != Eigen::Success)
    throw std::runtime_error(std::string(who) + ": eigensolver failure");
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error(std::string(who) +
                            ": imaginary part is not positive definite (not a "
                            "complexified Kahler class)");
  return y;
}

}  // namespace

SiegelPoint::SiegelPoint(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw std::invalid_argument("SiegelPoint: matrix must be square");
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::invalid_argument("SiegelPoint: matrix is not symmetric");
  require_spd_imag(m_, "SiegelPoint");
}

SymplecticElement SymplecticElement::identity(int g) {
  SymplecticElement e;
  e.a = IntMatrix::Identity(g, g);
  e.b = IntMatrix::Zero(g, g);
  e.c = IntMatrix::Zero(g, g);
  e.d = IntMatrix::Identity(g, g);
  return e;
}

SymplecticElement SymplecticElement::inversion(int g) {
  SymplecticElement e;
  e.a = IntMatrix::Zero(g, g);
  e.b = -IntMatrix::Identity(g, g);
  e.c = IntMatrix::Identity(g, g);
  e.d = IntMatrix::Zero(g, g);
  return e;
}

SymplecticElement SymplecticElement::translation(const IntMatrix& s) {
  if (s != s.transpose())
    throw std::invalid_argument("SymplecticElement: translation block must be symmetric");
  const int g = int(s.rows());
  SymplecticElement e;
  e.a = IntMatrix::Identity(g, g);
  e.b = s;
  e.c = IntMatrix::Zero(g, g);
  e.d = IntMatrix::Identity(g, g);
  return e;
}

SymplecticElement SymplecticElement::operator*(const SymplecticElement& rhs) const {
  SymplecticElement e;
  e.a = a * rhs.a + b * rhs.c;
  e.b = a * rhs.b + b * rhs.d;
  e.c = c * rhs.a + d * rhs.c;
  e.d = c * rhs.b + d * rhs.d;
  return e;
}

void SymplecticElement::validate() const {
  const int g = this->g();
  if (b.rows() != g || c.rows() != g || d.rows() != g)
    throw std::invalid_argument("SymplecticElement: block size mismatch");
  // gamma^T J gamma = J  <=>  A^T C = C^T A, B^T D = D^T B, A^T D - C^T B = I
  const IntMatrix atc = a.transpose() * c;
  const IntMatrix btd = b.transpose() * d;
  const IntMatrix atd_ctb = a.transpose() * d - c.transpose() * b;
  if (atc != atc.transpose() || btd != btd.transpose() ||
      atd_ctb != IntMatrix::Identity(g, g))
    throw std::invalid_argument("SymplecticElement: not symplectic");
}

SiegelPoint omega_to_M(std::complex<double> rho, std::complex<double> tau,
                       std::complex<double> sigma) {
  Eigen::MatrixXcd m(2, 2);
  m << rho, sigma, sigma, tau;
  return SiegelPoint(m);  // constructor enforces Im(M) > 0
}

std::complex<double> bergman_kernel(const SiegelPoint& m, const SiegelPoint& n) {
  const std::complex<double> minus_i(0.0, -1.0);
  Eigen::MatrixXcd arg = minus_i * (m.matrix() - n.matrix().conjugate());
  arg = 0.5 * (arg + arg.transpose().eval());  // kill rounding drift; stays symmetric
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(arg);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("bergman_kernel: eigensolver failure");
  std::complex<double> tr_log = 0.0;
  for (int k = 0; k < arg.rows(); ++k) {
    const std::complex<double> lambda = es.eigenvalues()(k);
    if (lambda.real() <= 0.0 && std::abs(lambda.imag()) < 1e-14)
      throw std::runtime_error("bergman_kernel: eigenvalue on the log branch cut");
    tr_log += std::log(lambda);
  }
  return -tr_log;
}

double bergman_potential(const SiegelPoint& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.imag());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("bergman_potential: eigensolver failure");
  double s = 0.0;
  for (int k = 0; k < m.g(); ++k) s += std::log(2.0 * es.eigenvalues()(k));
  return -s;
}

SiegelPoint sp_action(const SymplecticElement& gamma, const SiegelPoint& m) {
  gamma.validate();
  if (gamma.g() != m.g())
    throw std::invalid_argument("sp_action: genus mismatch");
  const Eigen::MatrixXcd a = gamma.a.cast<double>().cast<std::complex<double>>();
  const Eigen::MatrixXcd b = gamma.b.cast<double>().cast<std::complex<double>>();
  const Eigen::MatrixXcd c = gamma.c.cast<double>().cast<std::complex<double>>();
  const Eigen::MatrixXcd d = gamma.d.cast<double>().cast<std::complex<double>>();

  const Eigen::MatrixXcd num = a * m.matrix() + b;
  const Eigen::MatrixXcd den = c * m.matrix() + d;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(den);
  if (!lu.isInvertible() || lu.rcond() < 1e-12)
    throw std::runtime_error("sp_action: denominator C M + D is ill-conditioned");
  // X = num * den^{-1} via the transposed system.
  Eigen::MatrixXcd x =
      Eigen::FullPivLU<Eigen::MatrixXcd>(den.transpose()).solve(num.transpose()).transpose();
  const double drift = (x - x.transpose().eval()).cwiseAbs().maxCoeff();
  if (drift > 1e-10)
    throw std::runtime_error("sp_action: symmetry drift above threshold");
  x = 0.5 * (x + x.transpose().eval());
  return SiegelPoint(x);
}

double bergman_transform_law(const SymplecticElement& gamma, const SiegelPoint& m) {
  const SiegelPoint gm = sp_action(gamma, m);
  const Eigen::MatrixXcd den = gamma.c.cast<double>().cast<std::complex<double>>() * m.matrix() +
                               gamma.d.cast<double>().cast<std::complex<double>>();
  const double log_abs_det = std::log(std::abs(den.determinant()));
  return std::abs(bergman_potential(gm) - bergman_potential(m) - 2.0 * log_abs_det);
}

SymplecticElement random_symplectic(int g, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<int> entry(-1, 1);
  SymplecticElement w = SymplecticElement::identity(g);
  const int len = len_dist(rng);
  for (int l = 0; l < len; ++l) {
    if (letter(rng) == 0) {
      w = w * SymplecticElement::inversion(g);
    } else {
      IntMatrix s(g, g);
      for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
          s(i, j) = entry(rng);
          s(j, i) = s(i, j);
        }
      w = w * SymplecticElement::translation(s);
    }
  }
  w.validate();
  return w;
}

}  // namespace wpstab
