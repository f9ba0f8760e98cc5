#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detsat/cyclic_family.hpp"
#include "json.hpp"

namespace detsat {

/// Basis element T^t e_{w_1} ∧ ... ∧ e_{w_r} of a strand module.
struct StrandLabel {
  std::vector<int> t;      // length m+1, sum n - r
  std::vector<int> wedge;  // strictly increasing, 1-based
  friend bool operator==(const StrandLabel&, const StrandLabel&) = default;
  std::string to_string() const;
};

/// Labels of [K_r]_n sorted by (wedge subset lex, T-monomial grevlex descending).
std::vector<StrandLabel> strand_labels(int m, int n, int r);
/// C(m, r) * C(n - r + m, m), zero when r > n or r > m.
std::size_t strand_rank_formula(int m, int n, int r);

/// Degree-n strand of the Koszul complex on f_i = sum_j x_{ij} T_j, with
/// coefficients in R. boundary[r-1] is the matrix of d_r : [K_r]_n -> [K_{r-1}]_n
/// (rows index the target labels, columns the source labels).
struct StrandComplex {
  int m = 0;
  int n = 0;
  Ring ring;
  std::vector<std::vector<StrandLabel>> labels;  // labels[r], 0 <= r <= m
  std::vector<PolyMatrix> boundary;
  /// a^t for every label T^t of [K_0]_n, in label order.
  std::vector<Polynomial> augmentation;

  std::size_t rank(int r) const { return labels.at(static_cast<std::size_t>(r)).size(); }
  /// Largest r with a nonzero module.
  int top() const;
  const PolyMatrix& d(int r) const { return boundary.at(static_cast<std::size_t>(r - 1)); }
  std::optional<std::size_t> index_of(int r, const StrandLabel& label) const;
};

StrandComplex strand(const CyclicFamily& family, int n);

/// First r with d_r d_{r+1} != 0, or nullopt when the composites all vanish.
std::optional<int> composition_defect(const StrandComplex& c);
/// Every boundary entry lies in the irrelevant ideal (no constant terms).
bool is_minimal(const StrandComplex& c);

struct DegreeCertificate {
  int r = 0;
  std::size_t syzygy_generators = 0;
  std::size_t image_basis_size = 0;
  /// Whether ker d_r is contained in im d_{r+1} (or is zero at the top).
  bool ok = false;
  /// Offending syzygy, when !ok.
  std::optional<ModuleVector> counterexample;
  nlohmann::json to_json() const;
};

struct ExactnessCertificate {
  bool exact = false;
  std::vector<DegreeCertificate> degrees;
  nlohmann::json to_json() const;
};

/// Certifies H_r = 0 for 1 <= r <= top() by syzygy inclusion.
ExactnessCertificate is_exact(const StrandComplex& c);

struct AugmentationCertificate {
  bool ok = false;
  bool composite_zero = false;  // epsilon ∘ d_1 = 0
  std::size_t products = 0;
  std::size_t syzygy_generators = 0;
  std::optional<ModuleVector> counterexample;
  nlohmann::json to_json() const;
};

/// ker epsilon ⊆ im d_1 in degree n, with epsilon(T^t) = a^t.
AugmentationCertificate augmentation_check(const StrandComplex& c);

struct PdDepth {
  int pd = 0;
  int depth = 0;
};
/// pd(R/I^n) = 1 + top() and depth = (m + 1) - pd. Throws CertificateMissing
/// unless the complex is minimal and `certificate` certifies exactness.
PdDepth pd_depth(const StrandComplex& c, const ExactnessCertificate& certificate);

struct Claim2Result {
  bool decomposition_holds = false;
  bool claim1_injective = false;
  std::optional<int> claim3_determinant;  // the unimodular minor, +1 or -1
  std::vector<ModuleVector> v;            // v_(k,e), k = 1..m+1
  std::vector<std::size_t> exchanged_positions;
  nlohmann::json to_json() const;
};

/// d_m(e) = sum_k x_k^{beta_k} v_(k,e) at n = m, together with the
/// injectivity of k -> T_{ik} and the basis exchange determinant.
Claim2Result claim2_decomposition(const CyclicFamily& family);

}  // namespace detsat
