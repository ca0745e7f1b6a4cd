#pragma once

#include <vector>

#include "wpstab/ring.hpp"
#include "wpstab/series.hpp"

namespace wpstab {

// Chern classes c_1..c_n of the underlying variety; each c_k is real and of
// pure degree 2k. Absent entries are zero.
struct ChernData {
  RingPtr ring;
  std::vector<CohClass> c;  // c[k-1] = c_k

  static ChernData trivial(const RingPtr& ring);

  const CohClass& chern(int k) const { return c[std::size_t(k - 1)]; }
  bool calabi_yau() const;  // c_1 == 0
  void validate() const;
};

// Power sums p_1..p_n of the Chern roots via Newton's identities
// p_k = c1 p_{k-1} - c2 p_{k-2} + ... + (-1)^{k-1} k c_k.
std::vector<CohClass> chern_power_sums(const ChernData& chern);

// sum_i f(x_i) for a series f with f(0) = 0.
CohClass additive_class(const std::vector<double>& series, const ChernData& chern);

// prod_i f(x_i) for a series f with f(0) = 1, via exp(additive(log f)).
CohClass multiplicative_class(const std::vector<double>& series, const ChernData& chern);

// Convenience wrappers at a given series order (default 2n+1).
CohClass todd_class(const ChernData& chern, int order = -1);
CohClass sqrt_todd_class(const ChernData& chern, int order = -1);

// Additive class of Lambda(z) = Im log Gamma(1 + z/(2 pi i)).
CohClass log_gamma_class(const ChernData& chern, int order = -1);

// v_X(E) = ch(E) * sqrt(Td_X) * exp(i Lambda_X), truncated at degree 2n.
CohClass twisted_mukai_vector(const CohClass& ch_e, const ChernData& chern);
// Same with the unitary twist dropped (Lambda forced to zero).
CohClass untwisted_mukai_vector(const CohClass& ch_e, const ChernData& chern);

// | sqrt(z/(1-e^{-z})) e^{i Lambda(z)} - e^{z/4} Gamma(1 - i z / 2 pi) |
// with the left side evaluated from the truncated series and the right side
// from a direct Lanczos Gamma evaluation. Requires |z| < 2 pi.
double gamma_identity_check(double z, int order);

}  // namespace wpstab
