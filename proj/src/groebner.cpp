#include "detsat/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "detsat/errors.hpp"

namespace detsat {

namespace detail {

/// Term of a free-module element: coefficient * monomial * e_comp.
struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  FieldElement coeff;
};

/// Nonzero terms sorted descending under position-over-term.
using SVec = std::vector<VTerm>;

struct TermOrder {
  MonomialOrder order = MonomialOrder::grevlex();
  std::strong_ordering operator()(const VTerm& a, const VTerm& b) const {
    if (a.comp != b.comp) return b.comp <=> a.comp;
    return order.compare_unchecked(a.mono, b.mono);
  }
  std::strong_ordering compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    if (ac != bc) return bc <=> ac;
    return order.compare_unchecked(am, bm);
  }
};

struct Reducer {
  SVec poly;  // monic
  Monomial lm;
  std::uint32_t comp;
  unsigned sugar;
};

struct ReducerSet {
  TermOrder order;
  std::vector<Reducer> items;
};

namespace {

unsigned max_degree(const SVec& f) {
  unsigned d = 0;
  for (const auto& t : f) d = std::max(d, t.mono.degree());
  return d;
}

void make_monic(SVec& f) {
  if (f.empty() || f.front().coeff.is_one()) return;
  const FieldElement inv = f.front().coeff.inverse();
  for (auto& t : f) t.coeff *= inv;
}

/// r[from..] -= c * m * g[1..]; the leading term of c*m*g is assumed to have
/// already cancelled r[from - 1].
void subtract_tail(const TermOrder& ord, SVec& r, std::size_t from, const FieldElement& c, const Monomial& m,
                   const SVec& g) {
  SVec tail;
  tail.reserve(r.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < r.size() && j < g.size()) {
    const Monomial gm = g[j].mono * m;
    const auto cmp = ord.compare(r[i].mono, r[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      tail.push_back(std::move(r[i++]));
    } else if (cmp < 0) {
      tail.push_back(VTerm{gm, g[j].comp, -(g[j].coeff * c)});
      ++j;
    } else {
      r[i].coeff -= g[j].coeff * c;
      if (!r[i].coeff.is_zero()) tail.push_back(std::move(r[i]));
      ++i;
      ++j;
    }
  }
  for (; i < r.size(); ++i) tail.push_back(std::move(r[i]));
  for (; j < g.size(); ++j) tail.push_back(VTerm{g[j].mono * m, g[j].comp, -(g[j].coeff * c)});
  r.resize(from);
  r.insert(r.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
}

const Reducer* find_reducer(const std::vector<const Reducer*>& reducers, const VTerm& t) {
  for (const Reducer* g : reducers)
    if (g->comp == t.comp && g->lm.divides(t.mono)) return g;
  return nullptr;
}

/// Full reduction; updates *sugar when non-null.
SVec reduce_full(const TermOrder& ord, SVec r, const std::vector<const Reducer*>& reducers, unsigned* sugar) {
  std::size_t done = 0;
  while (done < r.size()) {
    const Reducer* g = find_reducer(reducers, r[done]);
    if (!g) {
      ++done;
      continue;
    }
    const Monomial m = r[done].mono / g->lm;
    const FieldElement c = r[done].coeff;  // reducers are monic
    if (sugar) *sugar = std::max(*sugar, g->sugar + m.degree());
    subtract_tail(ord, r, done + 1, c, m, g->poly);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(done));
  }
  return r;
}

SVec from_polynomial(const Polynomial& p, std::uint32_t comp = 0) {
  SVec out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(VTerm{t.mono, comp, t.coeff});
  return out;
}

Polynomial to_polynomial(const Ring& ring, const SVec& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial(ring, std::move(terms));
}

SVec from_vector(const ModuleVector& v) {
  SVec out;
  for (std::uint32_t i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back(VTerm{t.mono, i, t.coeff});
  return out;
}

ModuleVector to_vector(const Ring& ring, std::size_t rank, const SVec& f, std::size_t first_comp = 0) {
  std::vector<std::vector<Term>> coords(rank);
  for (const auto& t : f) {
    if (t.comp < first_comp) continue;
    coords.at(t.comp - first_comp).push_back(Term{t.mono, t.coeff});
  }
  std::vector<Polynomial> polys;
  polys.reserve(rank);
  for (auto& c : coords) polys.emplace_back(ring, std::move(c));
  return ModuleVector(std::move(polys));
}

void check_budget(const GbOptions& opts, const GbStats& stats, unsigned sugar) {
  if (stats.pairs_reduced > opts.max_pairs)
    throw ResourceExhausted("Gröbner pair budget of " + std::to_string(opts.max_pairs) + " exceeded");
  if (sugar > opts.max_degree)
    throw ResourceExhausted("Gröbner degree budget of " + std::to_string(opts.max_degree) + " exceeded");
  if (opts.deadline && (stats.pairs_reduced & 31) == 1 && std::chrono::steady_clock::now() > *opts.deadline)
    throw ResourceExhausted("Gröbner computation exceeded its time budget");
}

/// Buchberger over free-module elements. For rank-one input the product
/// criterion is enabled and a unit element terminates the computation.
class Engine {
 public:
  Engine(MonomialOrder order, bool rank_one, const GbOptions& opts)
      : ord_{order}, rank_one_(rank_one), opts_(opts) {}

  void add_input(SVec f) {
    unsigned sugar = max_degree(f);
    f = reduce_full(ord_, std::move(f), active(), &sugar);
    if (!f.empty()) insert(std::move(f), sugar);
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      const std::size_t best = select_pair();
      const Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      ++stats_.pairs_reduced;
      check_budget(opts_, stats_, p.sugar);
      unsigned sugar = p.sugar;
      SVec s = spoly(G_[p.i], G_[p.j], p.lcm);
      s = reduce_full(ord_, std::move(s), active(), &sugar);
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(s), sugar);
    }
  }

  /// Minimal, tail-reduced, monic basis sorted ascending by leading term.
  std::vector<Reducer> reduced_basis() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < G_.size(); ++i) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return ord_.compare(G_[a].lm, G_[a].comp, G_[b].lm, G_[b].comp) < 0;
    });
    std::vector<const Reducer*> kept;
    for (std::size_t i : idx) {
      bool divisible = false;
      for (const Reducer* k : kept)
        if (k->comp == G_[i].comp && k->lm.divides(G_[i].lm)) {
          divisible = true;
          break;
        }
      if (!divisible) kept.push_back(&G_[i]);
    }
    std::vector<Reducer> out;
    out.reserve(kept.size());
    for (const Reducer* k : kept) {
      SVec tail(k->poly.begin() + 1, k->poly.end());
      tail = reduce_full(ord_, std::move(tail), kept, nullptr);
      SVec full;
      full.reserve(tail.size() + 1);
      full.push_back(k->poly.front());
      full.insert(full.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
      out.push_back(Reducer{std::move(full), k->lm, k->comp, k->sugar});
    }
    return out;
  }

  const GbStats& stats() const { return stats_; }
  const TermOrder& order() const { return ord_; }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    unsigned sugar;
  };

  std::vector<const Reducer*> active() const {
    std::vector<const Reducer*> out;
    out.reserve(G_.size());
    for (const auto& g : G_) out.push_back(&g);
    return out;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const auto c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  SVec spoly(const Reducer& f, const Reducer& g, const Monomial& l) const {
    const Monomial mf = l / f.lm;
    const Monomial mg = l / g.lm;
    SVec r;
    r.reserve(f.poly.size() + g.poly.size());
    for (std::size_t k = 1; k < f.poly.size(); ++k)
      r.push_back(VTerm{f.poly[k].mono * mf, f.poly[k].comp, f.poly[k].coeff});
    // r now holds mf*tail(f); subtract mg*tail(g) by a merge starting at 0.
    SVec head;
    head.push_back(VTerm{l, f.comp, FieldElement()});
    head.insert(head.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    subtract_tail(ord_, head, 1, g.poly.front().coeff, mg, g.poly);
    head.erase(head.begin());
    return head;
  }

  void insert(SVec h, unsigned sugar) {
    make_monic(h);
    const std::size_t k = G_.size();
    G_.push_back(Reducer{std::move(h), Monomial(), 0, sugar});
    Reducer& hr = G_.back();
    hr.lm = hr.poly.front().mono;
    hr.comp = hr.poly.front().comp;
    redundant_.push_back(false);
    stats_.max_basis_size = std::max(stats_.max_basis_size, G_.size());
    if (rank_one_ && hr.lm.is_one()) {
      unit_ = true;
      pairs_.clear();
      return;
    }
    update(k);
  }

  // Gebauer–Möller installation of the pairs created by G_[k].
  void update(std::size_t k) {
    const Reducer& h = G_[k];
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool disjoint;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < k; ++g) {
      if (redundant_[g] || G_[g].comp != h.comp) continue;
      const Monomial l = lcm(h.lm, G_[g].lm);
      const bool disjoint = rank_one_ && l.degree() == h.lm.degree() + G_[g].lm.degree();
      cands.push_back(Candidate{g, l, disjoint});
    }
    // Chain criterion among the new pairs: drop (h,g1) if some other
    // surviving (h,g2) has lcm dividing lcm(h,g1).
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].disjoint) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          // Equal lcms: keep the later one only if it is itself kept.
          if (cands[b].lcm == cands[a].lcm && b > a && !cands[b].disjoint) continue;
          cands[a].alive = false;
          break;
        }
      }
    }
    // Prune old pairs whose lcm is a multiple of lm(h) with both new lcms different.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != h.comp || !h.lm.divides(p.lcm)) return false;
      const Monomial li = lcm(G_[p.i].lm, h.lm);
      const Monomial lj = lcm(G_[p.j].lm, h.lm);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const auto& c : cands) {
      if (!c.alive) continue;
      ++stats_.pairs_created;
      if (c.disjoint) continue;  // product criterion
      const Reducer& g = G_[c.g];
      const unsigned sugar =
          std::max(h.sugar + c.lcm.degree() - h.lm.degree(), g.sugar + c.lcm.degree() - g.lm.degree());
      pairs_.push_back(Pair{c.g, k, c.lcm, h.comp, sugar});
    }
    for (std::size_t g = 0; g < k; ++g)
      if (!redundant_[g] && G_[g].comp == h.comp && h.lm.divides(G_[g].lm)) redundant_[g] = true;
  }

  TermOrder ord_;
  bool rank_one_;
  const GbOptions& opts_;
  std::vector<Reducer> G_;
  std::vector<bool> redundant_;
  std::vector<Pair> pairs_;
  GbStats stats_;
  bool unit_ = false;
};

std::shared_ptr<ReducerSet> make_reducers(MonomialOrder order, std::vector<SVec> polys) {
  auto set = std::make_shared<ReducerSet>();
  set->order = TermOrder{order};
  for (auto& p : polys) {
    if (p.empty()) continue;
    make_monic(p);
    Reducer r{std::move(p), Monomial(), 0, 0};
    r.lm = r.poly.front().mono;
    r.comp = r.poly.front().comp;
    set->items.push_back(std::move(r));
  }
  return set;
}

SVec reduce_with(const ReducerSet& set, SVec f) {
  std::vector<const Reducer*> rs;
  rs.reserve(set.items.size());
  for (const auto& r : set.items) rs.push_back(&r);
  return reduce_full(set.order, std::move(f), rs, nullptr);
}

}  // namespace
}  // namespace detail

using detail::SVec;

namespace {

thread_local GbOptions g_default_options;

}  // namespace

GbOptions& default_gb_options() { return g_default_options; }

ScopedGbOptions::ScopedGbOptions(GbOptions options) : saved_(g_default_options) { g_default_options = options; }
ScopedGbOptions::~ScopedGbOptions() { g_default_options = saved_; }

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> generators, std::vector<Polynomial> basis,
                             GbStats stats)
    : ring_(std::move(ring)), generators_(std::move(generators)), basis_(std::move(basis)), stats_(stats) {
  std::vector<SVec> polys;
  for (const auto& b : basis_) {
    require_same_ring(ring_, b.ring(), "Gröbner basis");
    polys.push_back(detail::from_polynomial(b));
  }
  reducers_ = detail::make_reducers(ring_->order(), std::move(polys));
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& b : basis_) out.push_back(b.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "normal form");
  return detail::to_polynomial(ring_, detail::reduce_with(*reducers_, detail::from_polynomial(f)));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GbOptions& options) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs a ring; pass it explicitly for no generators");
  return buchberger(generators, generators.front().ring(), options);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const Ring& ring, const GbOptions& options) {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!generators.empty()) require_same_ring(generators.front().ring(), g.ring(), "buchberger");
    if (!g.is_zero()) gens.push_back(g.map_to(ring));
  }
  detail::Engine engine(ring->order(), true, options);
  for (const auto& g : gens) engine.add_input(detail::from_polynomial(g));
  engine.run();
  std::vector<Polynomial> basis;
  for (const auto& r : engine.reduced_basis()) basis.push_back(detail::to_polynomial(ring, r.poly));
  return GroebnerBasis(ring, std::move(gens), std::move(basis), engine.stats());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "S-polynomial");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto& one = f.ring()->one();
  return f.times_term(l / f.leading_monomial(), one / f.leading_coefficient()) -
         g.times_term(l / g.leading_monomial(), one / g.leading_coefficient());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!gb.normal_form(s_polynomial(b[i], b[j])).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Modules

ModuleVector::ModuleVector(Ring ring, std::size_t rank) : ring_(std::move(ring)) {
  coords_.assign(rank, Polynomial(ring_));
}

ModuleVector::ModuleVector(std::vector<Polynomial> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("ModuleVector needs at least one coordinate to know its ring");
  ring_ = coords_.front().ring();
  for (const auto& c : coords_) require_same_ring(ring_, c.ring(), "module vector");
}

bool ModuleVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
  if (rank() != rhs.rank()) throw ContextMismatch("module vectors of different rank");
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
  if (rank() != rhs.rank()) throw ContextMismatch("module vectors of different rank");
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

ModuleVector operator*(const Polynomial& c, const ModuleVector& v) {
  ModuleVector out = v;
  for (auto& x : out.coords_) x = c * x;
  return out;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.coords_ == b.coords_; }

Polynomial ModuleVector::dot(std::span<const Polynomial> values) const {
  if (values.size() != rank()) throw ContextMismatch("pairing length differs from rank");
  Polynomial sum(ring_);
  for (std::size_t i = 0; i < rank(); ++i)
    if (!coords_[i].is_zero()) sum += coords_[i] * values[i];
  return sum;
}

ModuleVector ModuleVector::combine(std::span<const ModuleVector> vectors) const {
  if (vectors.size() != rank()) throw ContextMismatch("combination length differs from rank");
  if (vectors.empty()) throw std::invalid_argument("empty combination");
  ModuleVector sum(ring_, vectors.front().rank());
  for (std::size_t i = 0; i < rank(); ++i)
    if (!coords_[i].is_zero()) sum += coords_[i] * vectors[i];
  return sum;
}

std::string ModuleVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

ModuleGroebnerBasis::ModuleGroebnerBasis(Ring ring, std::size_t rank, std::vector<ModuleVector> basis, GbStats stats)
    : ring_(std::move(ring)), rank_(rank), basis_(std::move(basis)), stats_(stats) {
  std::vector<SVec> polys;
  for (const auto& b : basis_) {
    if (b.rank() != rank_) throw ContextMismatch("module basis element of wrong rank");
    polys.push_back(detail::from_vector(b));
  }
  reducers_ = detail::make_reducers(ring_->order(), std::move(polys));
}

ModuleVector ModuleGroebnerBasis::reduce(const ModuleVector& v) const {
  if (v.rank() != rank_) throw ContextMismatch("vector rank differs from module rank");
  require_same_ring(ring_, v.ring(), "module reduction");
  return detail::to_vector(ring_, rank_, detail::reduce_with(*reducers_, detail::from_vector(v)));
}

ModuleGroebnerBasis module_groebner(std::span<const ModuleVector> generators, const Ring& ring, std::size_t rank,
                                    const GbOptions& options) {
  detail::Engine engine(ring->order(), false, options);
  for (const auto& g : generators) {
    if (g.rank() != rank) throw ContextMismatch("module generators of different rank");
    require_same_ring(ring, g.ring(), "module Gröbner basis");
    if (!g.is_zero()) engine.add_input(detail::from_vector(g));
  }
  engine.run();
  std::vector<ModuleVector> basis;
  for (const auto& r : engine.reduced_basis()) basis.push_back(detail::to_vector(ring, rank, r.poly));
  return ModuleGroebnerBasis(ring, rank, std::move(basis), engine.stats());
}

namespace {

// Syzygies via the augmented module {(v_i, e_i)}: under position-over-term
// with the original block dominating, the basis elements supported in the
// tracking block generate the syzygy module.
SyzygyBasis augmented_syzygies(const Ring& ring, std::size_t rank, std::span<const SVec> inputs,
                               const GbOptions& options) {
  const std::size_t s = inputs.size();
  detail::Engine engine(ring->order(), false, options);
  for (std::size_t i = 0; i < s; ++i) {
    SVec v = inputs[i];
    v.push_back(detail::VTerm{Monomial(ring->nvars()), static_cast<std::uint32_t>(rank + i), ring->one()});
    engine.add_input(std::move(v));
  }
  engine.run();
  SyzygyBasis out;
  out.rank = s;
  for (const auto& r : engine.reduced_basis())
    if (r.comp >= rank) out.generators.push_back(detail::to_vector(ring, s, r.poly, rank));
  return out;
}

}  // namespace

SyzygyBasis syzygies(std::span<const Polynomial> inputs, const GbOptions& options) {
  if (inputs.empty()) throw std::invalid_argument("syzygies of an empty list");
  const Ring& ring = inputs.front().ring();
  std::vector<SVec> vs;
  for (const auto& p : inputs) {
    require_same_ring(ring, p.ring(), "syzygies");
    vs.push_back(detail::from_polynomial(p));
  }
  return augmented_syzygies(ring, 1, vs, options);
}

SyzygyBasis syzygies(std::span<const ModuleVector> inputs, const GbOptions& options) {
  if (inputs.empty()) throw std::invalid_argument("syzygies of an empty list");
  const Ring& ring = inputs.front().ring();
  const std::size_t rank = inputs.front().rank();
  std::vector<SVec> vs;
  for (const auto& v : inputs) {
    if (v.rank() != rank) throw ContextMismatch("syzygy inputs of different rank");
    require_same_ring(ring, v.ring(), "syzygies");
    vs.push_back(detail::from_vector(v));
  }
  return augmented_syzygies(ring, rank, vs, options);
}

}  // namespace detsat
