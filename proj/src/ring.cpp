#include "wpstab/ring.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpstab {

namespace {

using nlohmann::json;

double rational_field(const json& obj, const char* num_key, const char* den_key) {
  const double num = obj.at(num_key).get<double>();
  const double den = obj.at(den_key).get<double>();
  if (den == 0.0) throw std::invalid_argument("ring spec: zero denominator");
  return num / den;
}

}  // namespace

std::shared_ptr<const GradedRingSpec> GradedRingSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ring spec: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::shared_ptr<const GradedRingSpec> GradedRingSpec::from_json_text(const std::string& text) {
  json j = json::parse(text);
  auto spec = std::shared_ptr<GradedRingSpec>(new GradedRingSpec());
  spec->name_ = j.at("name").get<std::string>();
  spec->dim_n_ = j.at("dim_n").get<int>();
  if (spec->dim_n_ < 1) throw std::invalid_argument("ring spec: dim_n must be >= 1");

  for (const auto& b : j.at("basis")) {
    BasisElement e;
    e.label = b.at("label").get<std::string>();
    e.degree = b.at("degree").get<int>();
    if (e.degree < 0 || e.degree > 2 * spec->dim_n_ || e.degree % 2 != 0)
      throw std::invalid_argument("ring spec: basis degree out of range: " + e.label);
    if (spec->index_of(e.label) >= 0)
      throw std::invalid_argument("ring spec: duplicate label: " + e.label);
    spec->basis_.push_back(e);
  }
  const std::size_t nb = spec->basis_.size();

  int units = 0;
  for (std::size_t k = 0; k < nb; ++k) {
    if (spec->basis_[k].degree == 0) {
      spec->unit_ = int(k);
      ++units;
    }
  }
  if (units != 1) throw std::invalid_argument("ring spec: need exactly one degree-0 element");

  spec->table_.assign(nb * nb, {});
  std::vector<bool> listed(nb * nb, false);
  for (const auto& m : j.at("mult")) {
    const int a = spec->index_of(m.at("a").get<std::string>());
    const int b = spec->index_of(m.at("b").get<std::string>());
    if (a < 0 || b < 0) throw std::invalid_argument("ring spec: mult references unknown label");
    std::vector<std::pair<int, double>> result;
    for (const auto& r : m.at("result")) {
      const int k = spec->index_of(r.at("label").get<std::string>());
      if (k < 0) throw std::invalid_argument("ring spec: result references unknown label");
      const double coeff = rational_field(r, "coeff_num", "coeff_den");
      if (spec->degree(k) != spec->degree(a) + spec->degree(b))
        throw std::invalid_argument("ring spec: product entry violates grading");
      if (coeff != 0.0) result.emplace_back(k, coeff);
    }
    const std::size_t ij = std::size_t(a) * nb + std::size_t(b);
    const std::size_t ji = std::size_t(b) * nb + std::size_t(a);
    if (listed[ij]) throw std::invalid_argument("ring spec: duplicate mult entry");
    spec->table_[ij] = result;
    listed[ij] = true;
    if (ij != ji) {
      if (listed[ji] && spec->table_[ji] != result)
        throw std::invalid_argument("ring spec: asymmetric mult entries");
      spec->table_[ji] = result;
      listed[ji] = true;
    }
  }

  spec->integral_.assign(nb, 0.0);
  for (const auto& it : j.at("integral")) {
    const int k = spec->index_of(it.at("label").get<std::string>());
    if (k < 0) throw std::invalid_argument("ring spec: integral references unknown label");
    if (spec->degree(k) != 2 * spec->dim_n_)
      throw std::invalid_argument("ring spec: integral supported outside top degree");
    spec->integral_[std::size_t(k)] = rational_field(it, "value_num", "value_den");
  }

  spec->validate();
  return spec;
}

int GradedRingSpec::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (basis_[k].label == label) return int(k);
  return -1;
}

void GradedRingSpec::validate() const {
  const int nb = size();
  auto mul = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(std::size_t(nb), 0.0);
    for (int i = 0; i < nb; ++i) {
      if (a[std::size_t(i)] == 0.0) continue;
      for (int j = 0; j < nb; ++j) {
        if (b[std::size_t(j)] == 0.0) continue;
        for (const auto& [k, c] : product(i, j))
          out[std::size_t(k)] += a[std::size_t(i)] * b[std::size_t(j)] * c;
      }
    }
    return out;
  };
  auto elem = [&](int k) {
    std::vector<Complex> v(std::size_t(nb), 0.0);
    v[std::size_t(k)] = 1.0;
    return v;
  };

  // unit acts as identity
  for (int i = 0; i < nb; ++i) {
    auto p = mul(elem(unit_), elem(i));
    for (int k = 0; k < nb; ++k) {
      const double expect = (k == i) ? 1.0 : 0.0;
      if (std::abs(p[std::size_t(k)] - expect) > 1e-14)
        throw std::runtime_error("ring spec: unit is not an identity");
    }
  }

  // commutativity (even degrees) and associativity, exhaustively
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      auto ij = mul(elem(i), elem(j));
      auto ji = mul(elem(j), elem(i));
      for (int k = 0; k < nb; ++k)
        if (std::abs(ij[std::size_t(k)] - ji[std::size_t(k)]) > 1e-14)
          throw std::runtime_error("ring spec: multiplication not commutative");
      for (int l = 0; l < nb; ++l) {
        auto left = mul(ij, elem(l));
        auto right = mul(elem(i), mul(elem(j), elem(l)));
        for (int k = 0; k < nb; ++k)
          if (std::abs(left[std::size_t(k)] - right[std::size_t(k)]) > 1e-12)
            throw std::runtime_error("ring spec: multiplication not associative");
      }
    }
}

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("CohClass: null ring");
  coeffs_.assign(std::size_t(ring_->size()), 0.0);
}

CohClass::CohClass(RingPtr ring, std::vector<Complex> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw std::invalid_argument("CohClass: null ring");
  if (coeffs_.size() != std::size_t(ring_->size()))
    throw std::invalid_argument("CohClass: coefficient count mismatch");
  check_finite();
}

CohClass CohClass::unit(const RingPtr& ring) {
  CohClass v(ring);
  v[ring->unit_index()] = 1.0;
  return v;
}

CohClass CohClass::basis_element(const RingPtr& ring, int k) {
  CohClass v(ring);
  v[k] = 1.0;
  return v;
}

CohClass CohClass::from_labels(const RingPtr& ring, const std::map<std::string, Complex>& coeffs) {
  CohClass v(ring);
  for (const auto& [label, c] : coeffs) {
    const int k = ring->index_of(label);
    if (k < 0) throw std::invalid_argument("CohClass: unknown label " + label);
    v[k] = c;
  }
  v.check_finite();
  return v;
}

CohClass CohClass::component(int degree) const {
  CohClass out(ring_);
  for (int k = 0; k < ring_->size(); ++k)
    if (ring_->degree(k) == degree) out[k] = coeffs_[std::size_t(k)];
  return out;
}

bool CohClass::pure_degree(int degree) const {
  for (int k = 0; k < ring_->size(); ++k)
    if (ring_->degree(k) != degree && coeffs_[std::size_t(k)] != 0.0) return false;
  return true;
}

bool CohClass::is_zero(double tol) const {
  for (const Complex& c : coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

bool CohClass::is_real(double tol) const {
  for (const Complex& c : coeffs_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double CohClass::max_norm() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void CohClass::check_finite() const {
  for (const Complex& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("CohClass: non-finite coefficient");
}

CohClass CohClass::conj() const {
  CohClass out(ring_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = std::conj(coeffs_[k]);
  return out;
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
  ensure_same_ring(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
  ensure_same_ring(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

CohClass& CohClass::operator*=(Complex s) {
  for (Complex& c : coeffs_) c *= s;
  return *this;
}

void ensure_same_ring(const CohClass& a, const CohClass& b) {
  if (a.ring() != b.ring())
    throw std::invalid_argument("incompatible operands: distinct ring specs");
}

CohClass multiply(const CohClass& a, const CohClass& b) {
  ensure_same_ring(a, b);
  const auto& ring = a.ring();
  CohClass out(ring);
  const int nb = ring->size();
  for (int i = 0; i < nb; ++i) {
    const Complex ai = a[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < nb; ++j) {
      const Complex bj = b[j];
      if (bj == 0.0) continue;
      for (const auto& [k, c] : ring->product(i, j)) out[k] += ai * bj * c;
    }
  }
  return out;
}

Complex integrate(const CohClass& a) {
  Complex s = 0.0;
  for (int k = 0; k < a.ring()->size(); ++k) {
    const double w = a.ring()->integral_weight(k);
    if (w != 0.0) s += a[k] * w;
  }
  return s;
}

CohClass mukai_dual(const CohClass& v) {
  CohClass out = v;
  for (int k = 0; k < v.ring()->size(); ++k)
    if ((v.ring()->degree(k) / 2) % 2 != 0) out[k] = -out[k];
  return out;
}

CohClass exp_class(const CohClass& omega) {
  if (!omega.pure_degree(2))
    throw std::invalid_argument("exp_class: argument must be pure degree 2");
  return exp_nilpotent(omega);
}

CohClass exp_nilpotent(const CohClass& a) {
  const auto& ring = a.ring();
  if (a[ring->unit_index()] != 0.0)
    throw std::invalid_argument("exp_nilpotent: degree-0 part must vanish");
  CohClass out = CohClass::unit(ring);
  CohClass power = CohClass::unit(ring);
  double factorial = 1.0;
  for (int k = 1; k <= ring->dim_n(); ++k) {
    power = multiply(power, a);
    factorial *= double(k);
    out += power * Complex(1.0 / factorial);
    if (power.is_zero()) break;
  }
  return out;
}

}  // namespace wpstab
