#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detsat/field.hpp"
#include "detsat/monomial.hpp"
#include "detsat/ring.hpp"

namespace detsat {

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse polynomial: nonzero terms sorted strictly descending in the ring's
/// default order. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const FieldElement& c);
  static Polynomial constant(Ring ring, long c);
  static Polynomial variable(Ring ring, std::size_t index, unsigned power = 1);
  static Polynomial variable(Ring ring, const std::string& name, unsigned power = 1);
  static Polynomial monomial(Ring ring, const Monomial& mono, const FieldElement& c);
  /// Parses canonical text (and more: parentheses, rational literals).
  static Polynomial parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term, zero if absent.
  FieldElement constant_term() const;
  /// Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const FieldElement& leading_coefficient() const { return terms_.front().coeff; }
  /// Maximum total degree; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Throws std::invalid_argument for a negative exponent.
  Polynomial pow(int exponent) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// q with q * divisor == *this, or nullopt when no polynomial quotient exists.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;
  /// Throwing variant of exact_divide.
  Polynomial divide_or_throw(const Polynomial& divisor) const;

  /// Re-expresses this polynomial in `target`, matching variables by name.
  Polynomial map_to(const Ring& target) const;

  /// Canonical text, e.g. "x1^2*x2 - x3^3".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Canonical rendering of a single monomial (no coefficient), "1" for the unit.
std::string monomial_to_string(const Ring& ring, const Monomial& m);

/// Three-way comparison of canonical forms (term by term in the ring order).
std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b);

}  // namespace detsat
