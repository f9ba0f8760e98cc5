#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "detsat/polynomial.hpp"

namespace detsat {

namespace detail {
struct ReducerSet;
}

/// Resource limits for a single Gröbner computation.
struct GbOptions {
  std::size_t max_pairs = 20'000'000;
  unsigned max_degree = 400;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Thread-local defaults used when no options are passed explicitly.
GbOptions& default_gb_options();

/// Installs GbOptions as the thread's default for the lifetime of the guard.
class ScopedGbOptions {
 public:
  explicit ScopedGbOptions(GbOptions options);
  ~ScopedGbOptions();
  ScopedGbOptions(const ScopedGbOptions&) = delete;
  ScopedGbOptions& operator=(const ScopedGbOptions&) = delete;

 private:
  GbOptions saved_;
};

struct GbStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};

/// Reduced Gröbner basis of an ideal with respect to the ring's order. The
/// basis is monic, auto-reduced and sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> generators, std::vector<Polynomial> basis, GbStats stats);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const GbStats& stats() const { return stats_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;

  /// Full remainder of f on division by the basis.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  GbStats stats_;
  std::shared_ptr<const detail::ReducerSet> reducers_;
};

/// Buchberger's algorithm with Gebauer–Möller pair elimination and a
/// sugar-degree pair queue; the computation uses the ring's own order.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const GbOptions& options = default_gb_options());
/// Same, after moving the generators into `ring` (same variables, other order).
GroebnerBasis buchberger(std::span<const Polynomial> generators, const Ring& ring,
                         const GbOptions& options = default_gb_options());

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Exhaustive Buchberger criterion: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Element of the free module R^rank, stored as its coordinate list.
class ModuleVector {
 public:
  ModuleVector(Ring ring, std::size_t rank);
  explicit ModuleVector(std::vector<Polynomial> coords);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
  Polynomial& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Polynomial>& coords() const { return coords_; }
  bool is_zero() const;

  ModuleVector& operator+=(const ModuleVector& rhs);
  ModuleVector& operator-=(const ModuleVector& rhs);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Polynomial& c, const ModuleVector& v);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

  /// Sum of coords[i] * values[i].
  Polynomial dot(std::span<const Polynomial> values) const;
  /// Sum of coords[i] * vectors[i].
  ModuleVector combine(std::span<const ModuleVector> vectors) const;
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> coords_;
};

/// Gröbner basis of a submodule of R^rank under position-over-term
/// (lower coordinate index dominates) refined by the ring's order.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(Ring ring, std::size_t rank, std::vector<ModuleVector> basis, GbStats stats);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& basis() const { return basis_; }
  const GbStats& stats() const { return stats_; }

  ModuleVector reduce(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return reduce(v).is_zero(); }

 private:
  Ring ring_;
  std::size_t rank_;
  std::vector<ModuleVector> basis_;
  GbStats stats_;
  std::shared_ptr<const detail::ReducerSet> reducers_;
};

/// `rank` is required so that an empty generator list still has a rank.
ModuleGroebnerBasis module_groebner(std::span<const ModuleVector> generators, const Ring& ring, std::size_t rank,
                                    const GbOptions& options = default_gb_options());

/// Generators of the syzygy module {c : sum c_i * input_i = 0}, each of rank
/// equal to the number of inputs.
struct SyzygyBasis {
  std::size_t rank = 0;
  std::vector<ModuleVector> generators;
};

SyzygyBasis syzygies(std::span<const Polynomial> inputs, const GbOptions& options = default_gb_options());
SyzygyBasis syzygies(std::span<const ModuleVector> inputs, const GbOptions& options = default_gb_options());

}  // namespace detsat
