#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wpstab/charclass.hpp"
#include "wpstab/ring.hpp"

namespace wpstab {

// <v, w> = int_X e^{c1/2} v^dual w.
Complex mukai_pairing(const CohClass& v, const CohClass& w, const ChernData& chern);

// Mukai vectors of a chosen basis {E_i} of the numerical Grothendieck group.
struct MukaiBasis {
  std::vector<CohClass> vectors;
  std::vector<std::string> labels;

  int size() const { return int(vectors.size()); }
};

// chi(E_i, E_j) and its inverse; inverse verified to 1e-12.
struct ChiMatrix {
  Eigen::MatrixXcd chi;
  Eigen::MatrixXcd chi_inv;

  int size() const { return int(chi.rows()); }
};

ChiMatrix euler_matrix(const MukaiBasis& basis, const ChernData& chern);

// Z(E) = -<section, v(E)>.
Complex central_charge(const CohClass& section, const CohClass& v, const ChernData& chern);

// The tuple Z(E_i).
struct CentralCharge {
  Eigen::VectorXcd values;

  int size() const { return int(values.size()); }
  CentralCharge conj() const { return {values.conjugate()}; }
};

CentralCharge sample_charge(const CohClass& section, const MukaiBasis& basis,
                            const ChernData& chern);

// b(Z1, Z2) = sum_{i,j} chi^{i,j} Z1(E_i) Z2(E_j).
Complex bilinear_b(const CentralCharge& z1, const CentralCharge& z2, const ChiMatrix& chi);

// i^{-n} as an exact complex unit.
Complex i_pow_neg(int n);

struct Tolerances {
  double tol_zero = 1e-9;
  double tol_pos = 1e-12;
};

// b(Z, Z) = 0 and i^{-n} b(Z, conj Z) > 0, up to the configured thresholds.
bool stab_plus(const CentralCharge& z, const ChiMatrix& chi, int n, Tolerances tol = {});

// K_WP = -log( i^{-n} b(Z, conj Z) ); requires stab_plus at the section.
double wp_potential(const CohClass& section, const MukaiBasis& basis, const ChernData& chern,
                    int n, Tolerances tol = {});

// Basis, Euler matrix and tolerances bundled for repeated evaluation.
class StabilityModel {
 public:
  StabilityModel(MukaiBasis basis, ChernData chern, Tolerances tol = {});

  const RingPtr& ring() const { return chern_.ring; }
  int dim_n() const { return chern_.ring->dim_n(); }
  const MukaiBasis& basis() const { return basis_; }
  const ChernData& chern() const { return chern_; }
  const ChiMatrix& chi() const { return chi_; }
  const Tolerances& tolerances() const { return tol_; }

  CentralCharge sample(const CohClass& section) const;
  Complex bilinear(const CentralCharge& z1, const CentralCharge& z2) const;
  // i^{-n} b(Z, conj Z) for the sampled section.
  Complex positivity_pairing(const CohClass& section) const;
  bool stab_plus(const CohClass& section) const;
  double wp_potential(const CohClass& section) const;

 private:
  MukaiBasis basis_;
  ChernData chern_;
  ChiMatrix chi_;
  Tolerances tol_;
};

}  // namespace wpstab
