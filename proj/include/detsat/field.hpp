#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace detsat {

/// Coefficient field descriptor: the rationals or Z/p for a prime p < 2^31.
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "qq" or "fp:PRIME".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime_u32(std::uint32_t n);

/// Residue class modulo a prime; value always in [0, p).
struct ModInt {
  std::uint32_t value;
  std::uint32_t modulus;
  friend bool operator==(const ModInt&, const ModInt&) = default;
};

/// An element of a Field. Rationals are kept canonical (lowest terms,
/// positive denominator) by GMP.
class FieldElement {
 public:
  FieldElement() : rep_(mpq_class(0)) {}
  FieldElement(const Field& field, long value);
  FieldElement(const Field& field, const mpq_class& value);
  static FieldElement from_residue(std::uint32_t value, std::uint32_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return rep_.index() == 1; }

  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  std::uint32_t residue() const { return std::get<ModInt>(rep_).value; }

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws std::domain_error on zero

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Rationals print as "p" or "p/q"; residues in the symmetric range.
  std::string to_string() const;

 private:
  explicit FieldElement(ModInt m) : rep_(m) {}

  std::variant<ModInt, mpq_class> rep_;
};

}  // namespace detsat
