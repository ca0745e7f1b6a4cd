#include "wpstab/charclass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpstab {

namespace {
constexpr Complex kI{0.0, 1.0};
}

ChernData ChernData::trivial(const RingPtr& ring) {
  ChernData d;
  d.ring = ring;
  d.c.assign(std::size_t(ring->dim_n()), CohClass(ring));
  return d;
}

bool ChernData::calabi_yau() const { return c.empty() || c[0].is_zero(); }

void ChernData::validate() const {
  if (!ring) throw std::invalid_argument("ChernData: null ring");
  if (c.size() != std::size_t(ring->dim_n()))
    throw std::invalid_argument("ChernData: need c_1..c_n");
  for (int k = 1; k <= ring->dim_n(); ++k) {
    const CohClass& ck = chern(k);
    if (ck.ring() != ring) throw std::invalid_argument("ChernData: ring mismatch");
    if (!ck.pure_degree(2 * k))
      throw std::invalid_argument("ChernData: c_k must be pure degree 2k");
    if (!ck.is_real())
      throw std::invalid_argument("ChernData: c_k must be real");
  }
}

std::vector<CohClass> chern_power_sums(const ChernData& chern) {
  const int n = chern.ring->dim_n();
  std::vector<CohClass> p;
  p.reserve(std::size_t(n));
  for (int k = 1; k <= n; ++k) {
    CohClass pk = chern.chern(k) * Complex(double(k) * ((k % 2 == 0) ? -1.0 : 1.0));
    for (int j = 1; j < k; ++j) {
      const Complex sign = (j % 2 == 0) ? -1.0 : 1.0;
      pk += sign * multiply(chern.chern(j), p[std::size_t(k - j - 1)]);
    }
    p.push_back(pk);
  }
  return p;
}

CohClass additive_class(const std::vector<double>& series, const ChernData& chern) {
  if (!series.empty() && series[0] != 0.0)
    throw std::invalid_argument("additive_class: series must have zero constant term");
  const int n = chern.ring->dim_n();
  const auto p = chern_power_sums(chern);
  CohClass out(chern.ring);
  for (int k = 1; k <= n && k < int(series.size()); ++k)
    out += p[std::size_t(k - 1)] * Complex(series[std::size_t(k)]);
  return out;
}

CohClass multiplicative_class(const std::vector<double>& series, const ChernData& chern) {
  if (series.empty() || series[0] != 1.0)
    throw std::invalid_argument("multiplicative_class: series must have constant term 1");
  return exp_nilpotent(additive_class(series_log(series), chern));
}

namespace {
int effective_order(const ChernData& chern, int order) {
  return order > 0 ? order : 2 * chern.ring->dim_n() + 1;
}
}  // namespace

CohClass todd_class(const ChernData& chern, int order) {
  return multiplicative_class(SeriesTable::make(effective_order(chern, order)).td, chern);
}

CohClass sqrt_todd_class(const ChernData& chern, int order) {
  return multiplicative_class(SeriesTable::make(effective_order(chern, order)).sqrt_td, chern);
}

CohClass log_gamma_class(const ChernData& chern, int order) {
  return additive_class(SeriesTable::make(effective_order(chern, order)).log_gamma, chern);
}

CohClass twisted_mukai_vector(const CohClass& ch_e, const ChernData& chern) {
  if (ch_e.ring() != chern.ring)
    throw std::invalid_argument("twisted_mukai_vector: ring mismatch");
  const CohClass twist = exp_nilpotent(kI * log_gamma_class(chern));
  return multiply(multiply(ch_e, sqrt_todd_class(chern)), twist);
}

CohClass untwisted_mukai_vector(const CohClass& ch_e, const ChernData& chern) {
  if (ch_e.ring() != chern.ring)
    throw std::invalid_argument("untwisted_mukai_vector: ring mismatch");
  return multiply(ch_e, sqrt_todd_class(chern));
}

double gamma_identity_check(double z, int order) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (std::abs(z) >= two_pi)
    throw std::domain_error("gamma_identity_check: series diverges for |z| >= 2 pi");
  const SeriesTable t = SeriesTable::make(order);
  const Complex lhs =
      series_eval(t.sqrt_td, z) * std::exp(kI * series_eval(t.log_gamma, z));
  const Complex rhs =
      std::exp(z / 4.0) * complex_gamma(Complex(1.0, -z / two_pi));
  return std::abs(lhs - rhs);
}

}  // namespace wpstab
