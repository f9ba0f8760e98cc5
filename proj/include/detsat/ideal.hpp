#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "detsat/groebner.hpp"
#include "json.hpp"

namespace detsat {

/// Ideal given by generators. Zero generators are dropped on construction.
/// Gröbner bases are computed on first use and cached per monomial order;
/// copies of an Ideal share the cache.
class Ideal {
 public:
  explicit Ideal(Ring ring) : Ideal(std::move(ring), {}) {}
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal unit(Ring ring);
  /// (x_{i} : i in indices), 0-based.
  static Ideal variables(Ring ring, std::span<const std::size_t> indices);
  /// The ideal of all variables.
  static Ideal maximal(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced basis in the ring's default order.
  const GroebnerBasis& groebner() const;
  /// Reduced basis in another order; the basis lives in ring()->with_order(order).
  const GroebnerBasis& groebner(const MonomialOrder& order) const;

  bool is_unit() const { return groebner().is_unit_ideal(); }
  bool contains(const Polynomial& f) const;
  /// J ⊆ *this.
  bool contains(const Ideal& J) const;
  Polynomial normal_form(const Polynomial& f) const { return groebner().normal_form(f); }

  nlohmann::json to_json() const;
  static Ideal from_json(Ring ring, const nlohmann::json& j);

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// f ∈ I.
bool is_member(const Polynomial& f, const Ideal& I);

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
/// I^n for n ≥ 1, generated by products of n generators up to scalar duplicates.
Ideal power(const Ideal& I, int n);

Ideal intersect(const Ideal& I, const Ideal& J);
/// I : (f). The unit ideal when f ∈ I.
Ideal colon(const Ideal& I, const Polynomial& f);
/// I : J for J ≠ 0.
Ideal colon(const Ideal& I, const Ideal& J);

struct Saturation {
  Ideal ideal;
  /// Number of colon steps that strictly enlarged the ideal.
  int steps;
};
/// Stable value of I ⊆ I:J ⊆ (I:J):J ⊆ ...
Saturation saturate(const Ideal& I, const Ideal& J);

/// Krull dimension of R/I; -1 for the unit ideal.
int dimension(const Ideal& I);
/// nvars - dimension; nvars + 1 for the unit ideal.
int height(const Ideal& I);
/// dim_k R/I. Throws NotZeroDimensional unless dimension(I) == 0.
std::size_t std_monomial_count(const Ideal& I);

/// Equality of reduced Gröbner bases.
bool ideal_equal(const Ideal& I, const Ideal& J);
/// J ⊆ I.
inline bool contains(const Ideal& I, const Ideal& J) { return I.contains(J); }

}  // namespace detsat
