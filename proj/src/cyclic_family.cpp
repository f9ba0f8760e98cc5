#include "detsat/cyclic_family.hpp"

#include <algorithm>

#include "detsat/errors.hpp"

namespace detsat {

CyclicSpec CyclicSpec::ones(int m) {
  CyclicSpec s;
  s.m = m;
  s.alpha.assign(static_cast<std::size_t>(std::max(m, 0)), std::vector<int>(static_cast<std::size_t>(m + 1), 1));
  s.validate();
  return s;
}

CyclicSpec CyclicSpec::random(int m, int max_entry, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, max_entry);
  CyclicSpec s;
  s.m = m;
  s.alpha.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m + 1)));
  for (auto& row : s.alpha)
    for (auto& e : row) e = dist(rng);
  s.validate();
  return s;
}

CyclicSpec CyclicSpec::from_json(int m, const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "ones") throw InputError("alpha must be \"ones\" or a JSON array");
    return ones(m);
  }
  if (!j.is_array()) throw InputError("alpha must be \"ones\" or a JSON array");
  CyclicSpec s;
  s.m = m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("alpha rows must be arrays");
    auto& r = s.alpha.emplace_back();
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw InputError("alpha entries must be integers");
      r.push_back(e.get<int>());
    }
  }
  s.validate();
  return s;
}

nlohmann::json CyclicSpec::to_json() const { return alpha; }

void CyclicSpec::validate() const {
  if (m < 1) throw InputError("m must be at least 1");
  if (m > 7) throw InputError("m above 7 exceeds the supported ring size");
  if (alpha.size() != static_cast<std::size_t>(m))
    throw InputError("alpha must have m = " + std::to_string(m) + " rows, got " + std::to_string(alpha.size()));
  for (const auto& row : alpha) {
    if (row.size() != static_cast<std::size_t>(m + 1))
      throw InputError("alpha rows must have m+1 = " + std::to_string(m + 1) + " entries");
    for (int e : row)
      if (e < 1) throw InputError("alpha entries must be positive integers");
  }
}

bool CyclicSpec::is_ones() const {
  return std::all_of(alpha.begin(), alpha.end(),
                     [](const auto& r) { return std::all_of(r.begin(), r.end(), [](int e) { return e == 1; }); });
}

int cyclic_column(int m, int i, int k) { return i <= k ? k - i + 1 : k - i + m + 2; }
int cyclic_variable(int m, int i, int j) { return i + j <= m + 2 ? i + j - 1 : i + j - m - 2; }

namespace {

Polynomial x_pow(const Ring& R, int k, int e) {
  return Polynomial::variable(R, static_cast<std::size_t>(k - 1), static_cast<unsigned>(e));
}

}  // namespace

PolyMatrix build_M(const CyclicSpec& spec, const Ring& ring) {
  spec.validate();
  const int m = spec.m;
  PolyMatrix M(ring, static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m + 1; ++j)
      M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          x_pow(ring, cyclic_variable(m, i, j), spec.at(i, j));
  return M;
}

BetaData beta(const CyclicSpec& spec, const Ring& ring) {
  spec.validate();
  const int m = spec.m;
  BetaData out;
  for (int k = 1; k <= m + 1; ++k) {
    int best = 0, sel = 0;
    for (int i = 1; i <= m; ++i) {
      const int e = spec.at(i, cyclic_column(m, i, k));
      if (sel == 0 || e < best) {
        best = e;
        sel = i;
      }
    }
    out.beta.push_back(best);
    out.selector.push_back(sel);
  }
  out.xprime.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= m + 1; ++k) {
      const int e = spec.at(i, cyclic_column(m, i, k)) - out.beta[static_cast<std::size_t>(k - 1)];
      out.xprime[static_cast<std::size_t>(i - 1)].push_back(x_pow(ring, k, e));
    }
  // Selector conditions and the entrywise factorization.
  for (int k = 1; k <= m + 1; ++k) {
    const int ik = out.selector[static_cast<std::size_t>(k - 1)];
    if (!out.xprime[static_cast<std::size_t>(ik - 1)][static_cast<std::size_t>(k - 1)].is_constant())
      throw ConstructionError("x'_{i_k,k} is not 1 for k = " + std::to_string(k));
  }
  const PolyMatrix M = build_M(spec, ring);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m + 1; ++j) {
      const int k = cyclic_variable(m, i, j);
      const bool first_case = i + j <= m + 2;
      if (first_case != (i <= k) || cyclic_column(m, i, k) != j)
        throw ConstructionError("entry index bookkeeping failed at (" + std::to_string(i) + "," + std::to_string(j) +
                                ")");
      const Polynomial lhs = M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      const Polynomial rhs = x_pow(ring, k, out.beta[static_cast<std::size_t>(k - 1)]) *
                             out.xprime[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
      if (!(lhs == rhs))
        throw ConstructionError("x_{ij} != x_k^{beta_k} x'_{ik} at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
  return out;
}

PolyMatrix build_A(const CyclicSpec& spec, const std::vector<Polynomial>& a, const BetaData& b) {
  const int m = spec.m;
  if (a.size() != static_cast<std::size_t>(m + 1)) throw ShapeMismatch("expected m+1 signed minors");
  const Ring& R = a.front().ring();
  PolyMatrix A(R, static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m; ++i)
    for (int k = 1; k <= m + 1; ++k)
      A(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) =
          b.xprime[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] *
          a[static_cast<std::size_t>(cyclic_column(m, i, k) - 1)];
  for (int i = 1; i <= m; ++i) {
    Polynomial s(R);
    for (int k = 1; k <= m + 1; ++k)
      s += A(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) *
           x_pow(R, k, b.beta[static_cast<std::size_t>(k - 1)]);
    if (!s.is_zero()) throw ConstructionError("row " + std::to_string(i) + " of A does not annihilate x^beta");
  }
  return A;
}

DeltaData extract_delta(const PolyMatrix& A, const std::vector<Polynomial>& y) {
  if (y.size() != A.cols() || A.cols() != A.rows() + 1)
    throw ShapeMismatch("extract_delta needs an r x (r+1) matrix and r+1 entries");
  const Ring& R = A.ring();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Polynomial s(R);
    for (std::size_t k = 0; k < A.cols(); ++k) s += A(i, k) * y[k];
    if (!s.is_zero()) throw std::invalid_argument("extract_delta: A * y is not zero");
  }
  DeltaData out{Polynomial(R), signed_max_minors(A)};
  Polynomial ysum(R), bsum(R);
  for (const auto& v : y) ysum += v;
  for (const auto& v : out.b) bsum += v;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!(ysum * out.b[k] == y[k] * bsum))
      throw ConstructionError("(sum y) b_k != y_k (sum b) for k = " + std::to_string(k + 1));
  out.delta = bsum.divide_or_throw(ysum);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!(y[k] * out.delta == out.b[k]))
      throw NotDivisible("y_k * delta != b_k for k = " + std::to_string(k + 1));
  return out;
}

CyclicFamily build(const CyclicSpec& spec, Field field, MonomialOrder order) {
  spec.validate();
  const int m = spec.m;
  const Ring R = RingContext::standard(static_cast<std::size_t>(m + 1), field, order);
  PolyMatrix M = build_M(spec, R);
  std::vector<Polynomial> a = signed_max_minors(M);
  Ideal I(R, a);
  Ideal maximal = Ideal::maximal(R);
  std::vector<Ideal> J;
  for (int k = 0; k <= m + 1; ++k) {
    std::vector<std::size_t> idx;
    for (int v = 0; v < k; ++v) idx.push_back(static_cast<std::size_t>(v));
    J.push_back(Ideal::variables(R, idx));
  }
  BetaData b = beta(spec, R);
  std::vector<Polynomial> y;
  for (int k = 1; k <= m + 1; ++k) y.push_back(x_pow(R, k, b.beta[static_cast<std::size_t>(k - 1)]));
  Ideal Q(R, y);
  Ideal Qprime(R, std::vector<Polynomial>(y.begin(), y.end() - 1));
  PolyMatrix A = build_A(spec, a, b);
  DeltaData d = extract_delta(A, y);
  int alpha_sum = 0;
  for (int i = 1; i <= m; ++i) alpha_sum += spec.at(i, m + 2 - i);
  return CyclicFamily{spec,
                      R,
                      std::move(M),
                      std::move(a),
                      std::move(I),
                      std::move(maximal),
                      std::move(J),
                      std::move(b),
                      std::move(y),
                      std::move(Q),
                      std::move(Qprime),
                      std::move(A),
                      std::move(d),
                      alpha_sum};
}

const Ideal& CyclicFamily::minors_ideal(int k) const {
  std::lock_guard lock(minors_cache->mutex);
  auto it = minors_cache->ideals.find(k);
  if (it == minors_cache->ideals.end()) it = minors_cache->ideals.emplace(k, detsat::minors_ideal(M, k)).first;
  return it->second;
}

bool congruence_hypothesis_holds(const CyclicFamily& f) {
  for (int k = 1; k <= f.spec.m; ++k)
    if (f.beta.beta[static_cast<std::size_t>(k - 1)] != f.spec.at(k, 1)) return false;
  return true;
}

CongruenceResult delta_congruence_check(const CyclicFamily& f) {
  if (!congruence_hypothesis_holds(f))
    throw HypothesisNotSatisfied("beta_k != alpha_{k,1} for some k <= m");
  const int m = f.spec.m;
  const int exponent = m * f.alpha_sum - f.beta.beta[static_cast<std::size_t>(m)];
  const Polynomial target = x_pow(f.ring, m + 1, exponent);
  for (int sign : {1, -1}) {
    const Polynomial diff = sign > 0 ? f.delta.delta - target : f.delta.delta + target;
    if (f.Qprime.contains(diff)) return {sign, exponent, target};
  }
  throw ConstructionError("delta is not congruent to +-" + target.to_string() + " modulo Q'");
}

std::vector<int> lambda_set(const CyclicFamily& f, int n) {
  if (n < 1) throw std::invalid_argument("lambda_set needs n >= 1");
  const int m = f.spec.m;
  std::vector<int> out;
  for (int i = std::max(1, m - n + 1); i <= m; ++i)
    if (height(f.minors_ideal(i)) == m - i + 2) out.push_back(i);
  return out;
}

WitnessPrimes witness_primes(const CyclicFamily& f) {
  if (!f.spec.is_ones()) throw HypothesisNotSatisfied("witness primes need alpha = 1");
  const int m = f.spec.m;
  const Ring& R = f.ring;
  auto diff = [&](int i, int j) { return x_pow(R, i, 1) - x_pow(R, j, 1); };
  std::vector<Polynomial> qd;
  for (int i = 1; i <= m; ++i) qd.push_back(diff(i, i + 1));
  WitnessPrimes out{Ideal(R, qd)};
  if (m >= 2) out.minors2_in_q_diff = out.q_diff.contains(f.minors_ideal(2));
  if (m >= 3 && m % 2 == 1) {
    std::vector<Polynomial> pg, qg;
    for (int i = 1; i <= m - 2; i += 2) pg.push_back(diff(i, i + 2));
    for (int j = 2; j <= m - 1; j += 2) qg.push_back(diff(j, j + 2));
    out.parity_generators_short = static_cast<int>(pg.size() + qg.size()) < m - 1;
    out.p = Ideal(R, pg);
    out.q = Ideal(R, qg);
    out.minors3_in_pq = sum(*out.p, *out.q).contains(f.minors_ideal(3));
  }
  return out;
}

}  // namespace detsat
