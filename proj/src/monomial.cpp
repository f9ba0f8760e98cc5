#include "detsat/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "detsat/errors.hpp"

namespace detsat {

namespace {

void check_nvars(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw ContextMismatch("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

void check_same(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw ContextMismatch("monomials have different variable counts");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::size_t nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw ContextMismatch("exponent vector length differs from variable count");
  for (std::size_t i = 0; i < nvars; ++i) {
    if (exponents[i] < 0 || exponents[i] > std::numeric_limits<std::uint16_t>::max())
      throw std::out_of_range("exponent out of range");
    exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  m.exps_[index] = static_cast<std::uint16_t>(power);
  m.refresh();
  return m;
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = exps_[i];
    degree_ += e;
    const std::uint64_t bits = (e >= 1 ? 1u : 0u) | (e >= 2 ? 2u : 0u) | (e >= 4 ? 4u : 0u) | (e >= 8 ? 8u : 0u);
    mask_ |= bits << (4 * i);
  }
}

std::vector<int> Monomial::exponents() const { return std::vector<int>(exps_.begin(), exps_.begin() + nvars_); }

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.nvars_);
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    out.exps_[i] = static_cast<std::uint16_t>(e);
  }
  out.refresh();
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.nvars_);
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::invalid_argument("monomial quotient is not a monomial");
    out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  out.refresh();
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.nvars_);
  for (std::size_t i = 0; i < kMaxVariables; ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  out.refresh();
  return out;
}

std::string_view MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Elimination:
      return "elimination";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  check_same(u, v);
  return compare_unchecked(u, v);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      unsigned wu = 0, wv = 0;
      for (std::size_t i = 0; i < kMaxVariables && i < 32; ++i) {
        if (mask_ & (1u << i)) {
          wu += u[i];
          wv += v[i];
        }
      }
      if (wu != wv) return wu <=> wv;
      [[fallthrough]];
    }
    case Kind::GrevLex:
      if (u.degree() != v.degree()) return u.degree() <=> v.degree();
      for (std::size_t i = kMaxVariables; i-- > 0;)
        if (u[i] != v[i]) return v[i] <=> u[i];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

}  // namespace detsat
