#pragma once

#include <string>
#include <vector>

#include "wpstab/stability.hpp"

namespace wpstab {

// Genus-0 Gromov-Witten numbers N_d for d = 1..d_max, treated as input data.
struct GWData {
  std::vector<double> invariants;
  std::string source;

  static GWData load_file(const std::string& path);
  static GWData from_json_text(const std::string& text);
  static GWData zero(int d_max = 1);

  int d_max() const { return int(invariants.size()); }
  void validate() const;
};

// Phi(q) = 1 + (1/5) sum_d N_d d^3 q^d; requires |q| < 1.
Complex phi_series(const GWData& gw, Complex q);

// Quantum exponential exp_*(tau H) on a one-modulus ring with basis degrees
// {0,2,4,6}: 1 + tau H + (tau^2/2) Phi(q) H^2 + (tau^3/6) Phi(q) H^3,
// q = e^{2 pi i tau}. Degenerates to exp_class(tau H) when Phi == 1.
CohClass quantum_exp(Complex tau, const GWData& gw, const RingPtr& ring);

// Whether Mukai vectors carry the log Gamma twist. `none` exists for the
// classical cross-checks where the twist is forced off.
enum class TwistMode { gamma, none };

// Quantum-corrected central charge and potential near the large volume limit,
// evaluated through the general bilinear-form pipeline.
class QuinticModel {
 public:
  QuinticModel(ChernData chern, std::vector<CohClass> basis_ch,
               std::vector<std::string> basis_labels, GWData gw,
               TwistMode twist = TwistMode::gamma, Tolerances tol = {});

  const StabilityModel& model() const { return model_; }
  const GWData& gw() const { return gw_; }
  TwistMode twist() const { return twist_; }

  Complex q_of(Complex tau) const;  // e^{2 pi i tau}
  CohClass section(Complex tau) const;
  CohClass mukai_vector(const CohClass& ch_e) const;

  // Z(E) = -<exp_*(tau H), v_X(E)>; domain error for |q| >= 1.
  Complex central_charge(Complex tau, const CohClass& ch_e) const;
  double wp_potential(Complex tau) const;
  bool stab_plus(Complex tau) const;

  // Model with the same data but Gromov-Witten numbers zeroed.
  QuinticModel classical() const;
  // Same ring, Chern data and basis with a different twist mode / GW input.
  QuinticModel variant(TwistMode twist, GWData gw) const;

 private:
  GWData gw_;
  TwistMode twist_;
  std::vector<CohClass> basis_ch_;
  StabilityModel model_;
};

}  // namespace wpstab
