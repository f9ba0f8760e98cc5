#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "detsat/ideal.hpp"
#include "detsat/poly_matrix.hpp"
#include "json.hpp"

namespace detsat {

/// Size m and the m x (m+1) exponent array of the cyclic family.
struct CyclicSpec {
  int m = 2;
  std::vector<std::vector<int>> alpha;

  static CyclicSpec ones(int m);
  /// Entries drawn uniformly from [1, max_entry].
  static CyclicSpec random(int m, int max_entry, std::mt19937_64& rng);
  /// Accepts the string "ones" or an m x (m+1) array of positive integers.
  static CyclicSpec from_json(int m, const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// Throws InputError on a bad shape or a non-positive entry.
  void validate() const;
  bool is_ones() const;
  /// 1-based access alpha_{ij}.
  int at(int i, int j) const { return alpha[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
};

/// Column of row i holding a power of x_k: k-i+1 if i <= k, else k-i+m+2.
int cyclic_column(int m, int i, int k);
/// Variable index k of the entry x_{ij}: i+j-1 if i+j <= m+2, else i+j-m-2.
int cyclic_variable(int m, int i, int j);

/// beta_k, the selectors i_k and the reduced entries x'_{ik}.
struct BetaData {
  std::vector<int> beta;                           // beta[k-1]
  std::vector<int> selector;                       // selector[k-1] = i_k
  std::vector<std::vector<Polynomial>> xprime;     // xprime[i-1][k-1]
};

/// Output of the delta extraction: delta with y_k * delta = b[k-1].
struct DeltaData {
  Polynomial delta;
  std::vector<Polynomial> b;
};

/// Everything derived from a spec over a chosen field.
struct CyclicFamily {
  CyclicSpec spec;
  Ring ring;
  PolyMatrix M;
  std::vector<Polynomial> a;
  Ideal I;
  Ideal maximal;
  std::vector<Ideal> J;  // J[k] = (x_1, ..., x_k), 0 <= k <= m+1
  BetaData beta;
  std::vector<Polynomial> y;  // x_k^{beta_k}
  Ideal Q;
  Ideal Qprime;
  PolyMatrix A;
  DeltaData delta;
  int alpha_sum = 0;

  /// I_k(M), computed once and shared between copies.
  const Ideal& minors_ideal(int k) const;

  struct MinorsCache {
    std::mutex mutex;
    std::map<int, Ideal> ideals;
  };
  std::shared_ptr<MinorsCache> minors_cache = std::make_shared<MinorsCache>();
};

/// Builds M, a, I and the section-four data; every construction identity is
/// asserted and a failure raises ConstructionError.
CyclicFamily build(const CyclicSpec& spec, Field field, MonomialOrder order = MonomialOrder::grevlex());

PolyMatrix build_M(const CyclicSpec& spec, const Ring& ring);
/// Asserts x_{ij} = x_k^{beta_k} x'_{ik} entrywise.
BetaData beta(const CyclicSpec& spec, const Ring& ring);
/// Asserts A * y = 0.
PolyMatrix build_A(const CyclicSpec& spec, const std::vector<Polynomial>& a, const BetaData& beta);
/// Requires A * y = 0 with sum(y) a nonzerodivisor. Checks
/// (sum y) b_k = y_k (sum b) before dividing and y_k delta = b_k after.
/// Throws NotDivisible when the quotient does not exist.
DeltaData extract_delta(const PolyMatrix& A, const std::vector<Polynomial>& y);

struct CongruenceResult {
  int sign;       // +1 or -1
  int exponent;   // m * alpha_sum - beta_{m+1}
  Polynomial target;
};
/// delta = sign * x_{m+1}^exponent mod Q'. Throws HypothesisNotSatisfied
/// unless beta_k = alpha_{k,1} for k <= m, ConstructionError if neither sign works.
CongruenceResult delta_congruence_check(const CyclicFamily& f);
bool congruence_hypothesis_holds(const CyclicFamily& f);

/// i with max(1, m-n+1) <= i <= m and height I_i(M) = m - i + 2.
std::vector<int> lambda_set(const CyclicFamily& f, int n);

struct WitnessPrimes {
  Ideal q_diff;                 // (x_1 - x_2, ..., x_m - x_{m+1})
  bool minors2_in_q_diff = false;
  std::optional<Ideal> p;       // odd i, 1 <= i <= m-2: x_i - x_{i+2}
  std::optional<Ideal> q;       // even j, 2 <= j <= m-1: x_j - x_{j+2}
  std::optional<bool> minors3_in_pq;
  /// Generator count of p + q is below m - 1.
  bool parity_generators_short = false;
};
/// Requires alpha = 1; the parity part is filled only for odd m >= 3.
WitnessPrimes witness_primes(const CyclicFamily& f);

}  // namespace detsat
