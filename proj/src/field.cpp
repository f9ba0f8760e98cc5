#include "detsat/field.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "detsat/errors.hpp"

namespace detsat {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void check_same(const ModInt& a, const ModInt& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("field elements from different prime fields");
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "qq" || text == "QQ") return rationals();
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InputError("malformed field modulus in '" + std::string(text) + "'");
    return prime(p);
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected qq or fp:PRIME)");
}

std::string Field::name() const {
  return is_rational() ? "qq" : "fp:" + std::to_string(modulus_);
}

FieldElement::FieldElement(const Field& field, long value) {
  if (field.is_rational()) {
    rep_ = mpq_class(value);
  } else {
    const std::int64_t p = field.modulus();
    std::int64_t r = static_cast<std::int64_t>(value) % p;
    if (r < 0) r += p;
    rep_ = ModInt{static_cast<std::uint32_t>(r), field.modulus()};
  }
}

FieldElement::FieldElement(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    rep_ = value;
    std::get<mpq_class>(rep_).canonicalize();
    return;
  }
  const std::uint32_t p = field.modulus();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  const auto n = static_cast<std::uint32_t>(num.get_ui());
  const auto d = static_cast<std::uint32_t>(den.get_ui());
  rep_ = ModInt{static_cast<std::uint32_t>(std::uint64_t{n} * mod_inverse(d, p) % p), p};
}

FieldElement FieldElement::from_residue(std::uint32_t value, std::uint32_t modulus) {
  return FieldElement(ModInt{value % modulus, modulus});
}

Field FieldElement::field() const {
  if (is_rational()) return Field::rationals();
  return Field::prime(std::get<ModInt>(rep_).modulus);
}

bool FieldElement::is_zero() const {
  if (const auto* m = std::get_if<ModInt>(&rep_)) return m->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool FieldElement::is_one() const {
  if (const auto* m = std::get_if<ModInt>(&rep_)) return m->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

FieldElement FieldElement::operator-() const {
  if (const auto* m = std::get_if<ModInt>(&rep_))
    return FieldElement(ModInt{m->value == 0 ? 0 : m->modulus - m->value, m->modulus});
  FieldElement out = *this;
  std::get<mpq_class>(out.rep_) = -std::get<mpq_class>(rep_);
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* m = std::get_if<ModInt>(&rep_))
    return FieldElement(ModInt{mod_inverse(m->value, m->modulus), m->modulus});
  FieldElement out = *this;
  std::get<mpq_class>(out.rep_) = 1 / std::get<mpq_class>(rep_);
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  if (auto* m = std::get_if<ModInt>(&rep_)) {
    const auto& r = std::get<ModInt>(rhs.rep_);
    check_same(*m, r);
    std::uint32_t s = m->value + r.value;
    if (s >= m->modulus) s -= m->modulus;
    m->value = s;
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  if (auto* m = std::get_if<ModInt>(&rep_)) {
    const auto& r = std::get<ModInt>(rhs.rep_);
    check_same(*m, r);
    m->value = m->value >= r.value ? m->value - r.value : m->value + m->modulus - r.value;
  } else {
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  if (auto* m = std::get_if<ModInt>(&rep_)) {
    const auto& r = std::get<ModInt>(rhs.rep_);
    check_same(*m, r);
    m->value = static_cast<std::uint32_t>(std::uint64_t{m->value} * r.value % m->modulus);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.rep_ == b.rep_; }

std::string FieldElement::to_string() const {
  if (const auto* m = std::get_if<ModInt>(&rep_)) {
    if (m->value > m->modulus / 2) return "-" + std::to_string(m->modulus - m->value);
    return std::to_string(m->value);
  }
  return std::get<mpq_class>(rep_).get_str();
}

}  // namespace detsat
