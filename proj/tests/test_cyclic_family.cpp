#include "doctest.h"
#include "helpers.hpp"

#include "detsat/cyclic_family.hpp"
#include "detsat/errors.hpp"

using namespace testing;

namespace {

CyclicSpec spec_of(int m, std::vector<std::vector<int>> alpha) {
  CyclicSpec s{m, std::move(alpha)};
  s.validate();
  return s;
}

}  // namespace

TEST_SUITE("cyclic_family") {

TEST_CASE("index maps") {
  // m = 3: row i holds x_i, x_{i+1}, ... cyclically.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) {
      const int k = cyclic_variable(3, i, j);
      CHECK(k == (i + j - 2) % 4 + 1);
      CHECK(cyclic_column(3, i, k) == j);
    }
}

TEST_CASE("build examples") {
  const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
  CHECK(f2.M.row(0) == Ps(f2.ring, {"x1", "x2", "x3"}));
  CHECK(f2.M.row(1) == Ps(f2.ring, {"x2", "x3", "x1"}));
  CHECK(ideal_equal(f2.maximal, Id(f2.ring, {"x1", "x2", "x3"})));
  CHECK(f2.J.size() == 4);
  CHECK(f2.J[0].is_zero());
  CHECK(ideal_equal(f2.J[2], Id(f2.ring, {"x1", "x2"})));

  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::rationals());
  CHECK(f3.M.row(2) == Ps(f3.ring, {"x3", "x4", "x1", "x2"}));
  CHECK(ideal_equal(f3.I, minors_ideal(f3.M, 3)));

  const CyclicFamily g = build(spec_of(2, {{2, 1, 1}, {1, 3, 1}}), Field::rationals());
  CHECK(g.M.row(0) == Ps(g.ring, {"x1^2", "x2", "x3"}));
  CHECK(g.M.row(1) == Ps(g.ring, {"x2", "x3^3", "x1"}));
}

TEST_CASE("beta examples") {
  const CyclicFamily f = build(CyclicSpec::ones(3), Field::rationals());
  CHECK(f.beta.beta == std::vector<int>{1, 1, 1, 1});
  for (const auto& row : f.beta.xprime)
    for (const auto& x : row) CHECK(x == Polynomial::constant(f.ring, 1));

  const CyclicSpec s = spec_of(2, {{2, 1, 1}, {1, 3, 1}});
  const BetaData b = beta(s, RingContext::standard(3, Field::rationals()));
  CHECK(b.beta == std::vector<int>{1, 1, 1});
  CHECK(b.selector == std::vector<int>{2, 1, 1});
  const Ring r = qq(3);
  CHECK(b.xprime[0][0].map_to(r) == P(r, "x1"));
  CHECK(b.xprime[1][2].map_to(r) == P(r, "x3^2"));
}

TEST_CASE("A and delta at m = 2") {
  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const auto& a = f.a;
  CHECK(f.A.row(0) == std::vector<Polynomial>{a[0], a[1], a[2]});
  CHECK(f.A.row(1) == std::vector<Polynomial>{a[2], a[0], a[1]});
  CHECK(f.delta.b == std::vector<Polynomial>{a[1] * a[1] - a[0] * a[2], a[2] * a[2] - a[0] * a[1],
                                             a[0] * a[0] - a[1] * a[2]});
  CHECK(f.delta.delta == P(f.ring, "x1^3 + x2^3 + x3^3 - 3*x1*x2*x3"));
  Polynomial ys(f.ring), bs(f.ring);
  for (std::size_t k = 0; k < 3; ++k) {
    ys += f.y[k];
    bs += f.delta.b[k];
  }
  CHECK(*bs.exact_divide(ys) == f.delta.delta);
  CHECK(f.alpha_sum == 2);
  CHECK(ideal_equal(f.Q, f.maximal));
  CHECK(ideal_equal(f.Qprime, Id(f.ring, {"x1", "x2"})));
}

TEST_CASE("extract_delta on the 1 x 2 Koszul case") {
  const Ring r = qq(2);
  const PolyMatrix A = PolyMatrix::from_rows(r, {Ps(r, {"x2", "-x1"})});
  const DeltaData d = extract_delta(A, Ps(r, {"x1", "x2"}));
  CHECK(d.delta == P(r, "-1"));
  CHECK(d.b == Ps(r, {"-x1", "-x2"}));
  const PolyMatrix bad = PolyMatrix::from_rows(r, {Ps(r, {"x2", "x1"})});
  CHECK_THROWS(extract_delta(bad, Ps(r, {"x1", "x2"})));
}

TEST_CASE("lemma 2.5 membership and delta outside I^m") {
  for (int m : {2, 3}) {
    const CyclicFamily f = build(CyclicSpec::ones(m), Field::prime(kDefaultPrime));
    const Ideal Im = power(f.I, m);
    for (const auto& y : f.y) CHECK(Im.contains(y * f.delta.delta));
    CHECK_FALSE(Im.contains(f.delta.delta));
  }
}

TEST_CASE("delta congruence") {
  const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
  const CongruenceResult c2 = delta_congruence_check(f2);
  CHECK(c2.exponent == 3);
  CHECK(c2.target == P(f2.ring, "x3^3"));
  CHECK(f2.Qprime.contains(f2.delta.delta - Polynomial::constant(f2.ring, c2.sign) * c2.target));

  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::rationals());
  const CongruenceResult c3 = delta_congruence_check(f3);
  CHECK(c3.exponent == 8);
  CHECK(c3.target == P(f3.ring, "x4^8"));

  const CyclicFamily g = build(spec_of(2, {{2, 1, 1}, {1, 3, 1}}), Field::rationals());
  CHECK_FALSE(congruence_hypothesis_holds(g));
  CHECK_THROWS_AS(delta_congruence_check(g), HypothesisNotSatisfied);
}

TEST_CASE("lambda_set examples") {
  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::prime(kDefaultPrime));
  CHECK(lambda_set(f3, 1) == std::vector<int>{3});
  CHECK(lambda_set(f3, 2) == std::vector<int>{2, 3});
  const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
  CHECK(lambda_set(f2, 2) == std::vector<int>{1, 2});
}

TEST_CASE("witness primes") {
  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::rationals());
  const WitnessPrimes w = witness_primes(f3);
  CHECK(ideal_equal(w.q_diff, Id(f3.ring, {"x1 - x2", "x2 - x3", "x3 - x4"})));
  CHECK(w.q_diff.size() == 3);
  CHECK(height(w.q_diff) == 3);
  CHECK(w.minors2_in_q_diff);
  REQUIRE(w.p.has_value());
  REQUIRE(w.q.has_value());
  CHECK(ideal_equal(*w.p, Id(f3.ring, {"x1 - x3"})));
  CHECK(ideal_equal(*w.q, Id(f3.ring, {"x2 - x4"})));
  CHECK(w.minors3_in_pq.value_or(false));
  CHECK_FALSE(w.parity_generators_short);

  const CyclicFamily f4 = build(CyclicSpec::ones(4), Field::prime(kDefaultPrime));
  const WitnessPrimes w4 = witness_primes(f4);
  CHECK_FALSE(w4.p.has_value());
  CHECK(w4.minors2_in_q_diff);

  const CyclicFamily g = build(spec_of(2, {{2, 1, 1}, {1, 3, 1}}), Field::rationals());
  CHECK_THROWS_AS(witness_primes(g), HypothesisNotSatisfied);
}

TEST_CASE("spec validation and json") {
  CHECK_THROWS_AS(spec_of(2, {{1, 2}, {3, 4}}), InputError);
  CHECK_THROWS_AS(spec_of(2, {{1, 1, 1}, {1, 0, 1}}), InputError);
  CHECK_THROWS_AS(CyclicSpec::from_json(2, nlohmann::json::parse("[[1,2],[3,4]]")).validate(), InputError);
  CHECK_THROWS_AS(CyclicSpec::from_json(2, nlohmann::json("twos")), InputError);
  CHECK(CyclicSpec::from_json(3, nlohmann::json("ones")).is_ones());
  std::mt19937_64 rng(3);
  const CyclicSpec s = CyclicSpec::random(3, 3, rng);
  const CyclicSpec t = CyclicSpec::from_json(3, s.to_json());
  CHECK(t.alpha == s.alpha);
  CHECK_THROWS_AS(CyclicSpec::ones(8).validate(), InputError);
}

TEST_CASE("random specs: factorization, annihilation, delta") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = trial % 2 ? 3 : 2;
    const CyclicSpec s = CyclicSpec::random(m, 3, rng);
    const CyclicFamily f = build(s, Field::rationals());
    CAPTURE(s.to_json().dump());
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m + 1; ++j) {
        const int k = cyclic_variable(m, i, j);
        CHECK(f.M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) ==
              f.y[static_cast<std::size_t>(k - 1)] *
                  f.beta.xprime[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)]);
      }
    for (int k = 1; k <= m + 1; ++k)
      CHECK(f.beta.xprime[static_cast<std::size_t>(f.beta.selector[static_cast<std::size_t>(k - 1)] - 1)]
                         [static_cast<std::size_t>(k - 1)] == Polynomial::constant(f.ring, 1));
    const PolyMatrix y = PolyMatrix(f.ring, static_cast<std::size_t>(m + 1), 1, f.y);
    CHECK((f.A * y).is_zero());
    for (std::size_t k = 0; k < f.y.size(); ++k) CHECK(f.y[k] * f.delta.delta == f.delta.b[k]);
    for (int k = 1; k < m; ++k) CHECK(f.minors_ideal(k).contains(f.minors_ideal(k + 1)));
  }
}

}  // TEST_SUITE
