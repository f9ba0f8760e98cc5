#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace detsat {

/// Upper bound on the number of ring variables. The cyclic family at m = 5
/// with a full T-block and one auxiliary needs 13.
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. Entries past the variable count
/// are always zero, so comparisons never need to know the count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }
  std::vector<int> exponents() const;
  std::uint64_t divmask() const { return mask_; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor | dividend.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  void refresh();

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
  std::uint64_t mask_ = 0;
};

/// Term orders on monomials. `Elimination` compares the total degree in the
/// masked variables first and breaks ties with grevlex.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, GrevLex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
  static MonomialOrder elimination(std::uint32_t eliminated_mask) {
    return MonomialOrder(Kind::Elimination, eliminated_mask);
  }

  Kind kind() const { return kind_; }
  std::uint32_t eliminated_mask() const { return mask_; }
  std::string_view name() const;

  /// Throws ContextMismatch if the variable counts differ.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  /// Unchecked fast path used inside the Gröbner kernels.
  std::strong_ordering compare_unchecked(const Monomial& u, const Monomial& v) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::uint32_t mask) : kind_(kind), mask_(mask) {}

  Kind kind_;
  std::uint32_t mask_;
};

}  // namespace detsat
