#include "wpstab/quantum.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpstab {

namespace {

MukaiBasis build_basis(const std::vector<CohClass>& basis_ch,
                       const std::vector<std::string>& labels, const ChernData& chern,
                       TwistMode twist) {
  MukaiBasis basis;
  basis.labels = labels;
  basis.vectors.reserve(basis_ch.size());
  for (const CohClass& ch : basis_ch)
    basis.vectors.push_back(twist == TwistMode::gamma ? twisted_mukai_vector(ch, chern)
                                                      : untwisted_mukai_vector(ch, chern));
  return basis;
}

// Unique basis element of the given degree; the one-modulus ring shape.
int unique_index_of_degree(const RingPtr& ring, int degree) {
  int found = -1;
  for (int k = 0; k < ring->size(); ++k) {
    if (ring->degree(k) == degree) {
      if (found >= 0) return -1;
      found = k;
    }
  }
  return found;
}

}  // namespace

GWData GWData::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open GW data: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

GWData GWData::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GWData gw;
  gw.source = j.value("source", std::string("unspecified"));
  const int d_max = j.at("d_max").get<int>();
  for (const auto& v : j.at("N")) gw.invariants.push_back(v.get<double>());
  if (int(gw.invariants.size()) != d_max)
    throw std::invalid_argument("GW data: d_max does not match the invariant list");
  gw.validate();
  return gw;
}

GWData GWData::zero(int d_max) {
  GWData gw;
  gw.invariants.assign(std::size_t(d_max), 0.0);
  gw.source = "zero";
  return gw;
}

void GWData::validate() const {
  if (invariants.empty()) throw std::invalid_argument("GW data: d_max must be >= 1");
  for (double v : invariants)
    if (!std::isfinite(v)) throw std::invalid_argument("GW data: non-finite entry");
}

Complex phi_series(const GWData& gw, Complex q) {
  if (std::abs(q) >= 1.0)
    throw std::domain_error("phi_series: |q| must be < 1");
  Complex s = 0.0;
  Complex qd = 1.0;
  for (int d = 1; d <= gw.d_max(); ++d) {
    qd *= q;
    s += gw.invariants[std::size_t(d - 1)] * double(d) * double(d) * double(d) * qd;
  }
  return 1.0 + s / 5.0;
}

CohClass quantum_exp(Complex tau, const GWData& gw, const RingPtr& ring) {
  if (ring->dim_n() != 3)
    throw std::invalid_argument("quantum_exp: expects a threefold ring");
  const int ih = unique_index_of_degree(ring, 2);
  if (ih < 0)
    throw std::invalid_argument("quantum_exp: ring is not one-modulus");
  const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau);
  const Complex phi = phi_series(gw, q);

  const CohClass h = CohClass::basis_element(ring, ih);
  const CohClass h2 = multiply(h, h);
  const CohClass h3 = multiply(h2, h);
  CohClass out = CohClass::unit(ring);
  out += tau * h;
  out += (tau * tau / 2.0) * phi * h2;
  out += (tau * tau * tau / 6.0) * phi * h3;
  return out;
}

QuinticModel::QuinticModel(ChernData chern, std::vector<CohClass> basis_ch,
                           std::vector<std::string> basis_labels, GWData gw, TwistMode twist,
                           Tolerances tol)
    : gw_(std::move(gw)),
      twist_(twist),
      basis_ch_(std::move(basis_ch)),
      model_(build_basis(basis_ch_, basis_labels, chern, twist), chern, tol) {
  gw_.validate();
}

Complex QuinticModel::q_of(Complex tau) const {
  return std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau);
}

CohClass QuinticModel::section(Complex tau) const {
  return quantum_exp(tau, gw_, model_.ring());
}

CohClass QuinticModel::mukai_vector(const CohClass& ch_e) const {
  return twist_ == TwistMode::gamma ? twisted_mukai_vector(ch_e, model_.chern())
                                    : untwisted_mukai_vector(ch_e, model_.chern());
}

Complex QuinticModel::central_charge(Complex tau, const CohClass& ch_e) const {
  return wpstab::central_charge(section(tau), mukai_vector(ch_e), model_.chern());
}

double QuinticModel::wp_potential(Complex tau) const {
  return model_.wp_potential(section(tau));
}

bool QuinticModel::stab_plus(Complex tau) const { return model_.stab_plus(section(tau)); }

QuinticModel QuinticModel::classical() const {
  return variant(twist_, GWData::zero(gw_.d_max()));
}

QuinticModel QuinticModel::variant(TwistMode twist, GWData gw) const {
  return QuinticModel(model_.chern(), basis_ch_, model_.basis().labels, std::move(gw), twist,
                      model_.tolerances());
}

}  // namespace wpstab
