#pragma once

#include <random>
#include <string>
#include <vector>

#include "detsat/ideal.hpp"
#include "detsat/polynomial.hpp"

namespace testing {

using namespace detsat;

inline Ring qq(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  return RingContext::standard(n, Field::rationals(), order);
}

inline Ring fp(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  return RingContext::standard(n, Field::prime(kDefaultPrime), order);
}

inline Polynomial P(const Ring& r, const std::string& text) { return Polynomial::parse(r, text); }

inline std::vector<Polynomial> Ps(const Ring& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline Ideal Id(const Ring& r, const std::vector<std::string>& texts) { return Ideal(r, Ps(r, texts)); }

/// Random polynomial with small integer coefficients and bounded degree.
inline Polynomial random_poly(const Ring& r, std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(r->nvars(), 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    ts.push_back({Monomial(r->nvars(), e), r->scalar(coeff(rng))});
  }
  return Polynomial(r, std::move(ts));
}

/// Random monomial-sparse polynomial with at most `terms` terms of exact degree range [1, max_deg].
inline Polynomial random_nonconstant(const Ring& r, std::mt19937_64& rng, int terms, int max_deg) {
  for (;;) {
    Polynomial p = random_poly(r, rng, terms, max_deg);
    if (!p.is_zero() && !p.is_constant()) return p;
  }
}

}  // namespace testing
