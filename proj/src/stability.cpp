#include "wpstab/stability.hpp"

#include <cmath>
#include <stdexcept>

namespace wpstab {

Complex mukai_pairing(const CohClass& v, const CohClass& w, const ChernData& chern) {
  ensure_same_ring(v, w);
  if (v.ring() != chern.ring) throw std::invalid_argument("mukai_pairing: ring mismatch");
  CohClass integrand = multiply(mukai_dual(v), w);
  if (!chern.calabi_yau()) {
    const CohClass half_c1 = chern.chern(1) * Complex(0.5);
    integrand = multiply(exp_class(half_c1), integrand);
  }
  return integrate(integrand);
}

ChiMatrix euler_matrix(const MukaiBasis& basis, const ChernData& chern) {
  const int n = basis.size();
  if (n == 0) throw std::invalid_argument("euler_matrix: empty basis");
  ChiMatrix out;
  out.chi.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.chi(i, j) = mukai_pairing(basis.vectors[std::size_t(i)],
                                    basis.vectors[std::size_t(j)], chern);

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(out.chi);
  if (!lu.isInvertible())
    throw std::runtime_error("euler_matrix: vectors do not form a basis (singular chi)");
  out.chi_inv = lu.inverse();

  const double drift =
      (out.chi * out.chi_inv - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (drift > 1e-12)
    throw std::runtime_error("euler_matrix: inverse verification failed");
  return out;
}

Complex central_charge(const CohClass& section, const CohClass& v, const ChernData& chern) {
  return -mukai_pairing(section, v, chern);
}

CentralCharge sample_charge(const CohClass& section, const MukaiBasis& basis,
                            const ChernData& chern) {
  CentralCharge z;
  z.values.resize(basis.size());
  for (int i = 0; i < basis.size(); ++i)
    z.values(i) = central_charge(section, basis.vectors[std::size_t(i)], chern);
  return z;
}

Complex bilinear_b(const CentralCharge& z1, const CentralCharge& z2, const ChiMatrix& chi) {
  if (z1.size() != chi.size() || z2.size() != chi.size())
    throw std::invalid_argument("bilinear_b: dimension mismatch");
  return z1.values.transpose() * chi.chi_inv * z2.values;
}

Complex i_pow_neg(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

bool stab_plus(const CentralCharge& z, const ChiMatrix& chi, int n, Tolerances tol) {
  const Complex bzz = bilinear_b(z, z, chi);
  if (std::abs(bzz) > tol.tol_zero) return false;
  const Complex w = i_pow_neg(n) * bilinear_b(z, z.conj(), chi);
  return w.real() > tol.tol_pos && std::abs(w.imag()) <= tol.tol_zero;
}

double wp_potential(const CohClass& section, const MukaiBasis& basis, const ChernData& chern,
                    int n, Tolerances tol) {
  const CentralCharge z = sample_charge(section, basis, chern);
  const ChiMatrix chi = euler_matrix(basis, chern);
  if (!stab_plus(z, chi, n, tol))
    throw std::domain_error("wp_potential: section is outside the positivity locus");
  const Complex w = i_pow_neg(n) * bilinear_b(z, z.conj(), chi);
  return -std::log(w.real());
}

StabilityModel::StabilityModel(MukaiBasis basis, ChernData chern, Tolerances tol)
    : basis_(std::move(basis)), chern_(std::move(chern)), tol_(tol) {
  chern_.validate();
  for (const CohClass& v : basis_.vectors)
    if (v.ring() != chern_.ring)
      throw std::invalid_argument("StabilityModel: basis vector on a different ring");
  chi_ = euler_matrix(basis_, chern_);
}

CentralCharge StabilityModel::sample(const CohClass& section) const {
  return sample_charge(section, basis_, chern_);
}

Complex StabilityModel::bilinear(const CentralCharge& z1, const CentralCharge& z2) const {
  return bilinear_b(z1, z2, chi_);
}

Complex StabilityModel::positivity_pairing(const CohClass& section) const {
  const CentralCharge z = sample(section);
  return i_pow_neg(dim_n()) * bilinear_b(z, z.conj(), chi_);
}

bool StabilityModel::stab_plus(const CohClass& section) const {
  return wpstab::stab_plus(sample(section), chi_, dim_n(), tol_);
}

double StabilityModel::wp_potential(const CohClass& section) const {
  const CentralCharge z = sample(section);
  if (!wpstab::stab_plus(z, chi_, dim_n(), tol_))
    throw std::domain_error("wp_potential: section is outside the positivity locus");
  const Complex w = i_pow_neg(dim_n()) * bilinear_b(z, z.conj(), chi_);
  return -std::log(w.real());
}

}  // namespace wpstab
