#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wpstab {

using Complex = std::complex<double>;

// Finite-basis model of an even-degree cohomology ring. Structure constants
// and the integration functional are exact rationals in the spec file and
// converted to double on load. Instances are immutable once built.
class GradedRingSpec {
 public:
  struct BasisElement {
    std::string label;
    int degree = 0;
  };

  static std::shared_ptr<const GradedRingSpec> load_file(const std::string& path);
  static std::shared_ptr<const GradedRingSpec> from_json_text(const std::string& text);

  const std::string& name() const { return name_; }
  int dim_n() const { return dim_n_; }
  int size() const { return int(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int degree(int k) const { return basis_[std::size_t(k)].degree; }
  const std::string& label(int k) const { return basis_[std::size_t(k)].label; }
  int index_of(const std::string& label) const;  // -1 when absent
  int unit_index() const { return unit_; }
  double integral_weight(int k) const { return integral_[std::size_t(k)]; }

  // (i, j) -> list of (basis index, coefficient); unlisted products are zero.
  const std::vector<std::pair<int, double>>& product(int i, int j) const {
    return table_[std::size_t(i) * basis_.size() + std::size_t(j)];
  }

  // Exhaustive checks over the basis: grading, commutativity, associativity,
  // unit behaviour, integral supported in top degree. Throws on violation.
  void validate() const;

 private:
  GradedRingSpec() = default;

  std::string name_;
  int dim_n_ = 0;
  int unit_ = -1;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::pair<int, double>>> table_;
  std::vector<double> integral_;
};

using RingPtr = std::shared_ptr<const GradedRingSpec>;

// Complex coefficient vector over a ring basis.
class CohClass {
 public:
  explicit CohClass(RingPtr ring);
  CohClass(RingPtr ring, std::vector<Complex> coeffs);

  static CohClass unit(const RingPtr& ring);
  static CohClass basis_element(const RingPtr& ring, int k);
  static CohClass from_labels(const RingPtr& ring, const std::map<std::string, Complex>& coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_[std::size_t(k)]; }
  Complex& operator[](int k) { return coeffs_[std::size_t(k)]; }

  CohClass component(int degree) const;      // projection onto one degree
  bool pure_degree(int degree) const;        // no mass outside `degree`
  bool is_zero(double tol = 0.0) const;
  bool is_real(double tol = 0.0) const;
  double max_norm() const;
  void check_finite() const;                 // throws on NaN/Inf

  CohClass conj() const;

  CohClass& operator+=(const CohClass& rhs);
  CohClass& operator-=(const CohClass& rhs);
  CohClass& operator*=(Complex s);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, Complex s) { return a *= s; }
  friend CohClass operator*(Complex s, CohClass a) { return a *= s; }

 private:
  RingPtr ring_;
  std::vector<Complex> coeffs_;
};

void ensure_same_ring(const CohClass& a, const CohClass& b);

// Bilinear extension of the structure constants; graded by construction.
CohClass multiply(const CohClass& a, const CohClass& b);

// Integration functional; sees only the degree-2n components.
Complex integrate(const CohClass& a);

// Degree-2k component scaled by (-1)^k. An involution.
CohClass mukai_dual(const CohClass& v);

// 1 + w + w^2/2! + ... truncated at degree 2n; w must be pure degree 2.
CohClass exp_class(const CohClass& omega);

// exp of a class with vanishing degree-0 part (internal building block for
// multiplicative characteristic classes and unitary twists).
CohClass exp_nilpotent(const CohClass& a);

}  // namespace wpstab
