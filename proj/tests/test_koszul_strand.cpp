#include "doctest.h"
#include "helpers.hpp"

#include "detsat/errors.hpp"
#include "detsat/koszul_strand.hpp"

using namespace testing;

namespace {

std::vector<std::size_t> ranks(const StrandComplex& c) {
  std::vector<std::size_t> out;
  for (int r = 0; r <= c.m; ++r) out.push_back(c.rank(r));
  return out;
}

}  // namespace

TEST_SUITE("koszul_strand") {

TEST_CASE("rank formula examples") {
  CHECK(strand_rank_formula(2, 1, 0) == 3);
  CHECK(strand_rank_formula(2, 1, 1) == 2);
  CHECK(strand_rank_formula(2, 1, 2) == 0);
  const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
  CHECK(ranks(strand(f2, 1)) == std::vector<std::size_t>{3, 2, 0});
  CHECK(ranks(strand(f2, 2)) == std::vector<std::size_t>{6, 6, 1});
  const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::rationals());
  CHECK(ranks(strand(f3, 3)) == std::vector<std::size_t>{20, 30, 12, 1});
}

TEST_CASE("label order") {
  const auto labels = strand_labels(2, 2, 1);
  REQUIRE(labels.size() == 6);
  // Wedge {1} block first, T monomials in descending grevlex.
  CHECK(labels[0].wedge == std::vector<int>{1});
  CHECK(labels[0].t == std::vector<int>{1, 0, 0});
  CHECK(labels[2].t == std::vector<int>{0, 0, 1});
  CHECK(labels[3].wedge == std::vector<int>{2});
  const auto top = strand_labels(2, 2, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0].wedge == std::vector<int>{1, 2});
  CHECK(top[0].t == std::vector<int>{0, 0, 0});
}

TEST_CASE("m = 2, n = 1 boundary is the transpose of M") {
  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const StrandComplex c = strand(f, 1);
  CHECK(c.d(1) == f.M.transpose());
  CHECK(c.augmentation == f.a);
}

TEST_CASE("complex, minimality, exactness and pd/depth") {
  struct Row {
    int m, n, pd, depth;
  };
  for (const Row row : {Row{2, 1, 2, 1}, Row{2, 2, 3, 0}, Row{2, 3, 3, 0}, Row{3, 1, 2, 2}, Row{3, 2, 3, 1},
                        Row{3, 3, 4, 0}}) {
    CAPTURE(row.m);
    CAPTURE(row.n);
    const CyclicFamily f = build(CyclicSpec::ones(row.m), Field::prime(kDefaultPrime));
    const StrandComplex c = strand(f, row.n);
    CHECK_FALSE(composition_defect(c).has_value());
    CHECK(is_minimal(c));
    const ExactnessCertificate cert = is_exact(c);
    CHECK(cert.exact);
    const PdDepth pd = pd_depth(c, cert);
    CHECK(pd.pd == row.pd);
    CHECK(pd.depth == row.depth);
    // Certificates are idempotent under re-checking.
    CHECK(is_exact(c).to_json() == cert.to_json());
  }
}

TEST_CASE("minimality rejects a unit entry; zero maps are minimal") {
  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  StrandComplex c = strand(f, 2);
  c.boundary[0] = PolyMatrix(f.ring, c.rank(0), c.rank(1));
  CHECK(is_minimal(c));
  c.boundary[0](0, 0) = Polynomial::constant(f.ring, 1);
  CHECK_FALSE(is_minimal(c));
}

TEST_CASE("pd_depth needs a certificate") {
  const CyclicFamily f = build(CyclicSpec::ones(2), Field::rationals());
  const StrandComplex c = strand(f, 2);
  CHECK_THROWS_AS(pd_depth(c, ExactnessCertificate{}), CertificateMissing);
}

TEST_CASE("augmentation examples") {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 2}}) {
    CAPTURE(m);
    CAPTURE(n);
    const CyclicFamily f = build(CyclicSpec::ones(m), Field::prime(kDefaultPrime));
    const AugmentationCertificate cert = augmentation_check(strand(f, n));
    CHECK(cert.composite_zero);
    CHECK(cert.ok);
  }
}

TEST_CASE("claim 2 decomposition") {
  for (int m : {2, 3}) {
    const CyclicFamily f = build(CyclicSpec::ones(m), Field::rationals());
    const Claim2Result r = claim2_decomposition(f);
    CHECK(r.decomposition_holds);
    CHECK(r.claim1_injective);
    REQUIRE(r.claim3_determinant.has_value());
    CHECK(std::abs(*r.claim3_determinant) == 1);
    CHECK(r.v.size() == static_cast<std::size_t>(m + 1));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = trial % 2 ? 3 : 2;
    const CyclicFamily f = build(CyclicSpec::random(m, 3, rng), Field::prime(kDefaultPrime));
    const Claim2Result r = claim2_decomposition(f);
    CHECK(r.decomposition_holds);
    CHECK(r.claim1_injective);
  }
}

}  // TEST_SUITE
