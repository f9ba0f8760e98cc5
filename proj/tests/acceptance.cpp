// Acceptance gate: one PASS/FAIL line per criterion, each within its budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "detsat/cyclic_family.hpp"
#include "detsat/errors.hpp"
#include "detsat/koszul_strand.hpp"
#include "detsat/verifier.hpp"

using namespace detsat;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

bool criterion(int id, const std::string& title, double budget_secs, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs <= budget_secs, "over budget");
  std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  (" << std::fixed
            << std::setprecision(2) << secs << " s of " << budget_secs << " s)";
  const std::string note = v.note.str();
  if (!note.empty()) std::cout << "  " << note;
  std::cout << std::endl;
  return v.ok;
}

/// Re-derives the determinantal identities from the built data.
void check_identities(const CyclicFamily& f, Verdict& v) {
  const int m = f.spec.m;
  const std::string tag = " [" + f.spec.to_json().dump() + "]";
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m + 1; ++j) {
      const auto k = static_cast<std::size_t>(cyclic_variable(m, i, j));
      v.require(f.M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) ==
                    f.y[k - 1] * f.beta.xprime[static_cast<std::size_t>(i - 1)][k - 1],
                "factorization" + tag);
    }
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    Polynomial s(f.ring);
    for (std::size_t k = 0; k < f.y.size(); ++k) s += f.A(i, k) * f.y[k];
    v.require(s.is_zero(), "A x^beta = 0" + tag);
  }
  const auto b = signed_max_minors(f.A);
  Polynomial ys(f.ring), bs(f.ring);
  for (std::size_t k = 0; k < b.size(); ++k) {
    ys += f.y[k];
    bs += b[k];
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    v.require(ys * b[k] == f.y[k] * bs, "claim identity" + tag);
    v.require(f.y[k] * f.delta.delta == b[k], "x_k^beta_k delta = b_k" + tag);
  }
}

bool all_pass(const Report& r, Verdict& v, const std::string& label) {
  for (const auto& c : r.checks)
    if (c.status != Status::Pass) v.require(false, label + " " + c.id + " " + to_string(c.status));
  return r.count(Status::Pass) == r.checks.size();
}

RunOptions options(int m, std::vector<std::string> suites, std::vector<int> ns = {}) {
  RunOptions o;
  o.spec = CyclicSpec::ones(m);
  o.suites = std::move(suites);
  o.ns = std::move(ns);
  return o;
}

const CheckResult* find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

int main() {
  int failures = 0;

  failures += !criterion(1, "determinantal identities", 30, [](Verdict& v) {
    std::mt19937_64 rng(1);
    int specs = 0;
    for (int m : {2, 3}) {
      check_identities(build(CyclicSpec::ones(m), Field::rationals()), v);
      ++specs;
    }
    for (int t = 0; t < 50; ++t, ++specs)
      check_identities(build(CyclicSpec::random(2 + t % 2, 3, rng), Field::rationals()), v);
    v.note << specs << " specs over QQ";
  });

  failures += !criterion(2, "saturation theorem", 21 * 60, [](Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    all_pass(run(options(2, {"saturation"})), v, "m=2");
    const double m2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(m2 < 60, "m=2 over 1 min");
    const auto t1 = std::chrono::steady_clock::now();
    RunOptions o3 = options(3, {"saturation"});
    o3.field = Field::prime(kDefaultPrime);
    const Report r3 = run(o3);
    all_pass(r3, v, "m=3");
    const double m3 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    v.require(m3 < 20 * 60, "m=3 over 20 min");
    const CheckResult* len = find(r3, "saturation.length");
    v.require(len && len->certificate["product_beta"] == 1, "length certificate");
    v.note << "m=2 " << std::setprecision(2) << m2 << " s, m=3 " << m3 << " s";
  });

  failures += !criterion(3, "resolution theorem", 30 * 60, [](Verdict& v) {
    for (int m : {2, 3}) {
      const Report r = run(options(m, {"resolution"}));
      all_pass(r, v, "m=" + std::to_string(m));
      for (int n : {1, 2, 3}) {
        const std::string sfx = ".n" + std::to_string(n);
        for (const char* stem : {"resolution.ranks", "resolution.complex", "resolution.minimal", "resolution.exact",
                                 "resolution.pd_depth"})
          v.require(find(r, stem + sfx) != nullptr, std::string(stem) + sfx + " missing");
        if (n <= 2) v.require(find(r, "resolution.augmentation" + sfx) != nullptr, "augmentation" + sfx + " missing");
      }
    }
    v.note << "(m, n) in {2, 3} x {1, 2, 3}";
  });

  failures += !criterion(4, "heights", 10 * 60, [](Verdict& v) {
    const std::vector<std::vector<int>> expected{{3, 2}, {4, 3, 2}};
    for (int m : {2, 3}) {
      const CyclicFamily f = build(CyclicSpec::ones(m), m == 2 ? Field::rationals() : Field::prime(kDefaultPrime));
      std::vector<int> hs;
      for (int k = 1; k <= m; ++k) hs.push_back(height(f.minors_ideal(k)));
      v.require(hs == expected[static_cast<std::size_t>(m - 2)], "heights at m=" + std::to_string(m));
      all_pass(run(options(m, {"heights"})), v, "m=" + std::to_string(m));
    }
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      const int m = 2 + t % 2;
      const CyclicFamily f = build(CyclicSpec::random(m, 3, rng), Field::prime(kDefaultPrime));
      for (int k = 1; k <= m; ++k) {
        v.require(dimension(sum(f.J[static_cast<std::size_t>(k - 1)], f.minors_ideal(k))) == 0,
                  "J + I_k not m-primary " + f.spec.to_json().dump());
        v.require(height(f.minors_ideal(k)) >= m - k + 2, "height bound " + f.spec.to_json().dump());
      }
    }
    v.note << "plus 20 random specs";
  });

  failures += !criterion(5, "embedded primes", 30 * 60, [](Verdict& v) {
    RunOptions o = options(3, {"embedded"});
    o.field = Field::prime(kDefaultPrime);
    const Report r = run(o);
    for (int n : {1, 2, 3}) {
      const CheckResult* c = find(r, "embedded.maximal_membership.n" + std::to_string(n));
      v.require(c && c->status == Status::Pass, "maximal membership n=" + std::to_string(n));
    }
    const CheckResult* strict = find(r, "embedded.symbolic_strict.n2");
    v.require(strict && strict->status == Status::Pass && strict->certificate["equal"] == false, "strictness");
    const CheckResult* witness = find(r, "embedded.witness.n2");
    const CheckResult* necessary = find(r, "embedded.necessary.n2");
    v.require(witness && witness->status != Status::Fail, "witness");
    if (witness && witness->status == Status::Inconclusive)
      v.require(necessary && necessary->status == Status::Pass, "witness inconclusive and necessary conditions fail");
    if (witness) v.note << "witness " << to_string(witness->status);
  });

  failures += !criterion(6, "delta congruence", 60, [](Verdict& v) {
    const CyclicFamily f2 = build(CyclicSpec::ones(2), Field::rationals());
    const CongruenceResult c2 = delta_congruence_check(f2);
    v.require(c2.target.to_string() == "x3^3", "m=2 target");
    const CyclicFamily f3 = build(CyclicSpec::ones(3), Field::rationals());
    const CongruenceResult c3 = delta_congruence_check(f3);
    v.require(c3.target.to_string() == "x4^8", "m=3 target");
    v.note << "delta = " << (c2.sign > 0 ? "+" : "-") << "x3^3, " << (c3.sign > 0 ? "+" : "-") << "x4^8 mod Q'";
  });

  failures += !criterion(7, "engine property suites", 5 * 60, [](Verdict& v) {
    const std::string cmd = std::string(DETSAT_TESTS_PATH) + " --test-suite=properties --no-version > /dev/null";
    const int status = std::system(cmd.c_str());
    v.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "property suite");
    v.note << ">= 1000 random cases";
  });

  std::cout << (7 - failures) << "/7 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
