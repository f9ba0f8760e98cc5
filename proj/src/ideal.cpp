#include "detsat/ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "detsat/errors.hpp"

namespace detsat {

namespace {

struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return compare_polynomials(a, b) < 0; }
};

/// Keeps the first of every family of scalar multiples.
std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::set<Polynomial, PolyLess> seen;
  std::vector<Polynomial> out;
  for (auto& g : gens)
    if (!g.is_zero() && seen.insert(g.monic()).second) out.push_back(std::move(g));
  return out;
}

std::uint32_t support(const Monomial& m, std::size_t nvars) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    if (m[i]) s |= 1u << i;
  return s;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal generators");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::variables(Ring ring, std::span<const std::size_t> indices) {
  std::vector<Polynomial> gens;
  for (std::size_t i : indices) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<std::size_t> all(ring->nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return variables(std::move(ring), all);
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring_->order()); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->bases)
    if (o == order) return *gb;
  const Ring target = order == ring_->order() ? ring_ : ring_->with_order(order);
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, target));
  cache_->bases.emplace_back(order, gb);
  return *gb;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "ideal membership");
  return f.is_zero() || groebner().contains(f);
}

bool Ideal::contains(const Ideal& J) const {
  require_same_ring(ring_, J.ring_, "ideal containment");
  return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

nlohmann::json Ideal::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

Ideal Ideal::from_json(Ring ring, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("an ideal must be a JSON array of polynomial strings");
  std::vector<Polynomial> gens;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError("an ideal must be a JSON array of polynomial strings");
    gens.push_back(Polynomial::parse(ring, e.get<std::string>()));
  }
  return Ideal(std::move(ring), std::move(gens));
}

bool is_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), dedupe(std::move(gens)));
}

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), dedupe(std::move(gens)));
}

namespace {

// Appends every product g[k]*... over non-decreasing index sequences of length left.
void power_products(const std::vector<Polynomial>& g, std::size_t from, int left, const Polynomial& acc,
                    std::vector<Polynomial>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t k = from; k < g.size(); ++k) power_products(g, k, left - 1, acc * g[k], out);
}

}  // namespace

Ideal power(const Ideal& I, int n) {
  if (n < 1) throw std::invalid_argument("ideal power exponent must be at least 1");
  std::vector<Polynomial> gens;
  power_products(I.generators(), 0, n, Polynomial::constant(I.ring(), 1), gens);
  return Ideal(I.ring(), dedupe(std::move(gens)));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "intersection");
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
  const Ring S = I.ring()->with_elimination_variable("t");
  const Polynomial t = Polynomial::variable(S, S->nvars() - 1);
  const Polynomial one_minus_t = Polynomial::constant(S, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.map_to(S));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.map_to(S));
  const auto gb = buchberger(gens, S);
  std::vector<Polynomial> out;
  const std::size_t tv = S->nvars() - 1;
  for (const auto& b : gb.basis()) {
    const bool has_t = std::any_of(b.terms().begin(), b.terms().end(), [&](const Term& x) { return x.mono[tv] > 0; });
    if (!has_t) out.push_back(b.map_to(I.ring()));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "colon");
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (I.contains(f)) return Ideal::unit(I.ring());
  const Ideal both = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : both.generators()) gens.push_back(g.divide_or_throw(f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "colon");
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& f : J.generators()) {
    if (I.contains(f)) continue;
    Ideal part = colon(I, f);
    acc = acc ? intersect(*acc, part) : std::move(part);
  }
  return acc ? *std::move(acc) : Ideal::unit(I.ring());
}

Saturation saturate(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  int steps = 0;
  while (true) {
    Ideal next = colon(current, J);
    if (current.contains(next)) return {current, steps};
    current = std::move(next);
    ++steps;
  }
}

int dimension(const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  if (I.is_zero()) return static_cast<int>(n);
  const auto& gb = I.groebner();
  if (gb.is_unit_ideal()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(support(m, n));
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t lm) { return (lm & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int height(const Ideal& I) { return static_cast<int>(I.ring()->nvars()) - dimension(I); }

namespace {

std::size_t count_staircase(const std::vector<Monomial>& lms, const std::vector<unsigned>& bound, std::vector<int>& exps,
                            std::size_t var, std::size_t nvars) {
  if (var == nvars) return 1;
  std::size_t total = 0;
  for (unsigned e = 0; e < bound[var]; ++e) {
    exps[var] = static_cast<int>(e);
    // Divisibility by a leading monomial only involving variables < var+1.
    std::vector<int> partial(exps.begin(), exps.end());
    for (std::size_t k = var + 1; k < nvars; ++k) partial[k] = 0;
    const Monomial m(nvars, partial);
    const bool hit = std::any_of(lms.begin(), lms.end(), [&](const Monomial& lm) { return lm.divides(m); });
    if (hit) break;  // larger e stays divisible
    total += count_staircase(lms, bound, exps, var + 1, nvars);
  }
  exps[var] = 0;
  return total;
}

}  // namespace

std::size_t std_monomial_count(const Ideal& I) {
  if (dimension(I) != 0) throw NotZeroDimensional("the quotient ring is not finite-dimensional");
  const std::size_t n = I.ring()->nvars();
  const auto lms = I.groebner().leading_monomials();
  std::vector<unsigned> bound(n, 0);
  for (const auto& lm : lms) {
    const std::uint32_t s = support(lm, n);
    if (std::popcount(s) != 1) continue;
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(s));
    if (bound[v] == 0 || lm[v] < bound[v]) bound[v] = lm[v];
  }
  std::vector<int> exps(n, 0);
  return count_staircase(lms, bound, exps, 0, n);
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal equality");
  return I.groebner().basis() == J.groebner().basis();
}

}  // namespace detsat
