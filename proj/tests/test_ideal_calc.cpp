#include "doctest.h"
#include "helpers.hpp"

#include "detsat/cyclic_family.hpp"
#include "detsat/errors.hpp"

using namespace testing;

TEST_SUITE("ideal_calc") {

TEST_CASE("sum, product, power") {
  const Ring r = qq(3);
  CHECK(ideal_equal(sum(Id(r, {"x1"}), Id(r, {"x2"})), Id(r, {"x1", "x2"})));
  const Ideal sq = power(Id(r, {"x1", "x2"}), 2);
  CHECK(sq.size() == 3);
  CHECK(ideal_equal(sq, Id(r, {"x1^2", "x1*x2", "x2^2"})));
  CHECK(ideal_equal(product(Id(r, {"x1"}), Id(r, {"x2", "x3"})), Id(r, {"x1*x2", "x1*x3"})));

  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const Ideal I2 = power(f.I, 2);
  CHECK(I2.size() == 6);
  for (const auto& g : I2.generators()) CHECK(g.total_degree() == 4);
  CHECK_THROWS(power(f.I, 0));
}

TEST_CASE("intersect examples") {
  const Ring r = qq(3);
  CHECK(ideal_equal(intersect(Id(r, {"x1"}), Id(r, {"x2"})), Id(r, {"x1*x2"})));
  CHECK(ideal_equal(intersect(Id(r, {"x1", "x2"}), Id(r, {"x1"})), Id(r, {"x1"})));
  CHECK(ideal_equal(intersect(Id(r, {"x1^2"}), Id(r, {"x1*x2"})), Id(r, {"x1^2*x2"})));
  // Non-monomial case: (x1 + x2) ∩ (x1 - x2) = (x1^2 - x2^2).
  CHECK(ideal_equal(intersect(Id(r, {"x1 + x2"}), Id(r, {"x1 - x2"})), Id(r, {"x1^2 - x2^2"})));
}

TEST_CASE("colon examples") {
  const Ring r = qq(3);
  CHECK(ideal_equal(colon(Id(r, {"x1^2"}), Id(r, {"x1"})), Id(r, {"x1"})));
  CHECK(ideal_equal(colon(Id(r, {"x1*x2", "x1*x3"}), Id(r, {"x2", "x3"})), Id(r, {"x1"})));
  CHECK(colon(Id(r, {"x1"}), P(r, "x1*x2")).is_unit());

  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const Ideal I2 = power(f.I, 2);
  const Ideal expected = sum(I2, Ideal(f.ring, {f.delta.delta}));
  CHECK(ideal_equal(colon(I2, f.maximal), expected));
}

TEST_CASE("saturate examples") {
  const Ring r = qq(3);
  const Saturation s = saturate(Id(r, {"x1^2*x2"}), Id(r, {"x1"}));
  CHECK(ideal_equal(s.ideal, Id(r, {"x2"})));
  CHECK(s.steps == 2);

  const CyclicFamily f = build(CyclicSpec::ones(3), Field::prime(kDefaultPrime));
  for (int n : {1, 2}) {
    const Ideal In = power(f.I, n);
    const Saturation sn = saturate(In, f.maximal);
    CHECK(sn.steps == 0);
    CHECK(ideal_equal(sn.ideal, In));
  }
  const Ideal I2 = power(f.I, 2);
  const Ideal sym = saturate(I2, f.minors_ideal(2)).ideal;
  const Ideal sat = saturate(I2, f.maximal).ideal;
  CHECK(sym.contains(sat));
  CHECK_FALSE(sat.contains(sym));
}

TEST_CASE("dimension and height") {
  const Ring r = qq(3);
  CHECK(dimension(Id(r, {"x1", "x2", "x3"})) == 0);
  CHECK(dimension(Ideal(r)) == 3);
  CHECK(dimension(Ideal::unit(r)) == -1);
  CHECK(height(Ideal::unit(r)) == 4);
  CHECK(dimension(Id(r, {"x1*x2", "x1*x3"})) == 2);
  CHECK(height(Id(r, {"x1*x2", "x1*x3"})) == 1);

  const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
  CHECK(height(f2.minors_ideal(2)) == 2);
  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::prime(kDefaultPrime));
  CHECK(height(f3.minors_ideal(2)) == 3);
}

TEST_CASE("std_monomial_count examples") {
  const Ring r = qq(3);
  CHECK(std_monomial_count(Id(r, {"x1", "x2", "x3"})) == 1);
  CHECK(std_monomial_count(Id(r, {"x1^2", "x2", "x3"})) == 2);
  CHECK(std_monomial_count(Id(r, {"x1^2", "x2^3", "x3^4"})) == 24);
  CHECK(std_monomial_count(Id(r, {"x1^2 - x2", "x2^2 - x3", "x3^2 - 1"})) == 8);
  CHECK_THROWS_AS(std_monomial_count(Id(r, {"x1"})), NotZeroDimensional);
}

TEST_CASE("equality and containment") {
  const Ring r = qq(2);
  CHECK(ideal_equal(Id(r, {"x1", "x2"}), Id(r, {"x2", "x1 + x2"})));
  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const Ideal I2 = power(f.I, 2);
  const Ideal sat = saturate(I2, f.maximal).ideal;
  CHECK(contains(sat, I2));
  CHECK_FALSE(ideal_equal(sat, I2));
}

TEST_CASE("json round trip") {
  const Ring r = qq(3);
  const Ideal I = Id(r, {"x1^2 - x2*x3", "x3^3"});
  const Ideal J = Ideal::from_json(r, I.to_json());
  CHECK(J.generators() == I.generators());
}

}  // TEST_SUITE
