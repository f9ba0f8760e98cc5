#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "detsat/cyclic_family.hpp"
#include "detsat/errors.hpp"

using namespace testing;

namespace {

bool same_set(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto less = [](const Polynomial& x, const Polynomial& y) { return compare_polynomials(x, y) < 0; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

bool spans_each_other(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b, const Ring& r,
                      std::size_t rank) {
  const auto ga = module_groebner(a, r, rank), gb = module_groebner(b, r, rank);
  return std::all_of(b.begin(), b.end(), [&](const ModuleVector& v) { return ga.contains(v); }) &&
         std::all_of(a.begin(), a.end(), [&](const ModuleVector& v) { return gb.contains(v); });
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("buchberger examples") {
  const Ring r = qq(3);
  const auto mono = Ps(r, {"x1", "x2"});
  CHECK(same_set(buchberger(mono).basis(), mono));

  const Ring l = qq(3, MonomialOrder::lex());
  const auto gb = buchberger(Ps(l, {"x1^2 - x2", "x1*x2 - x3"}));
  CHECK(same_set(gb.basis(), Ps(l, {"x1^2 - x2", "x1*x2 - x3", "x1*x3 - x2^2", "x2^3 - x3^2"})));
  CHECK(satisfies_buchberger_criterion(gb));

  const auto zero = buchberger(Ps(r, {"0"}));
  CHECK(zero.is_zero_ideal());
  CHECK(buchberger(Ps(r, {"x1 + 1", "x1"})).is_unit_ideal());
}

TEST_CASE("reduced basis is monic, auto-reduced, presentation independent") {
  const Ring r = qq(3);
  const auto a = buchberger(Ps(r, {"2*x1*x2 - x3^2", "x2^2 - x1*x3", "x1^2 - 3*x2*x3"}));
  const auto b = buchberger(Ps(r, {"x2^2 - x1*x3 + 2*x1*x2 - x3^2", "2*x1*x2 - x3^2", "x1^2 - 3*x2*x3"}));
  CHECK(a.basis() == b.basis());
  for (const auto& g : a.basis()) {
    CHECK(g.leading_coefficient().is_one());
    for (const auto& h : a.basis())
      if (!(g == h))
        for (const auto& t : g.terms()) CHECK_FALSE(h.leading_monomial().divides(t.mono));
  }
}

TEST_CASE("normal_form examples") {
  const Ring r = qq(3);
  CHECK(buchberger(Ps(r, {"x1"})).normal_form(P(r, "x1^2")).is_zero());
  CHECK(buchberger(Ps(r, {"x1"})).normal_form(P(r, "x2^2")) == P(r, "x2^2"));

  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const Ideal I2 = power(f.I, 2);
  const auto& a = f.a;
  CHECK(I2.normal_form(a[0] * a[0] - a[1] * a[2]).is_zero());
  CHECK_FALSE(is_member(f.delta.delta, I2));
}

TEST_CASE("is_member examples") {
  const Ring r = qq(2);
  CHECK(is_member(P(r, "x1^2"), Id(r, {"x1"})));
  CHECK_FALSE(is_member(P(r, "1"), Id(r, {"x1", "x2"})));
}

TEST_CASE("module_groebner examples") {
  const Ring r = qq(3);
  const ModuleVector v(Ps(r, {"x1", "0"}));
  const auto g = module_groebner(std::vector<ModuleVector>{v}, r, 2);
  REQUIRE(g.basis().size() == 1);
  CHECK(g.basis()[0] == v);

  const std::vector<ModuleVector> e{ModuleVector(Ps(r, {"1", "0"})), ModuleVector(Ps(r, {"0", "1"}))};
  const auto ge = module_groebner(e, r, 2);
  CHECK(ge.contains(ModuleVector(Ps(r, {"x1^3 - x2", "x3 + 7"}))));

  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const std::vector<ModuleVector> rows{ModuleVector(f.M.row(0)), ModuleVector(f.M.row(1))};
  const auto gm = module_groebner(rows, f.ring, 3);
  for (const auto& row : rows) CHECK(gm.contains(row));
  CHECK_FALSE(gm.contains(ModuleVector(Ps(f.ring, {"1", "0", "0"}))));
}

TEST_CASE("syzygies examples") {
  const Ring r = qq(2);
  const auto s = syzygies(Ps(r, {"x1", "x2"}));
  REQUIRE(s.generators.size() == 1);
  CHECK(spans_each_other(s.generators, {ModuleVector(Ps(r, {"x2", "-x1"}))}, r, 2));

  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const auto sa = syzygies(f.a);
  for (const auto& g : sa.generators) CHECK(g.dot(f.a).is_zero());
  CHECK(spans_each_other(sa.generators, {ModuleVector(f.M.row(0)), ModuleVector(f.M.row(1))}, f.ring, 3));

  const auto unit = syzygies(Ps(r, {"1"}));
  CHECK(std::all_of(unit.generators.begin(), unit.generators.end(),
                    [](const ModuleVector& v) { return v.is_zero(); }));
}

TEST_CASE("module syzygies pair to zero") {
  const Ring r = qq(3);
  const std::vector<ModuleVector> cols{ModuleVector(Ps(r, {"x1", "x2"})), ModuleVector(Ps(r, {"x2", "x3"})),
                                       ModuleVector(Ps(r, {"x3", "x1"}))};
  const auto s = syzygies(cols);
  REQUIRE_FALSE(s.generators.empty());
  for (const auto& g : s.generators) CHECK(g.combine(cols).is_zero());
}

TEST_CASE("budgets raise ResourceExhausted") {
  const CyclicFamily f = build(CyclicSpec::ones(3), Field::prime(kDefaultPrime));
  const Ideal I3 = power(f.I, 3);
  GbOptions tight;
  tight.max_pairs = 5;
  CHECK_THROWS_AS(buchberger(I3.generators(), tight), ResourceExhausted);

  GbOptions late;
  late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(buchberger(I3.generators(), late), ResourceExhausted);

  {
    ScopedGbOptions scope(tight);
    CHECK_THROWS_AS(buchberger(I3.generators()), ResourceExhausted);
  }
  CHECK_NOTHROW(buchberger(f.I.generators()));
}

TEST_CASE("s_polynomial") {
  const Ring l = qq(3, MonomialOrder::lex());
  const Polynomial s = s_polynomial(P(l, "x1^2 - x2"), P(l, "x1*x2 - x3"));
  CHECK(s == P(l, "x1*x3 - x2^2"));
}

}  // TEST_SUITE
