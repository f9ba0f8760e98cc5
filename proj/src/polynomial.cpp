#include "detsat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "detsat/errors.hpp"

namespace detsat {

namespace {

struct DescendingTerms {
  const MonomialOrder& order;
  bool operator()(const Term& a, const Term& b) const { return order.compare_unchecked(a.mono, b.mono) > 0; }
};

/// Merges two descending term lists, `b` scaled by `sign` (+1 or -1).
std::vector<Term> merge(const MonomialOrder& order, std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = order.compare_unchecked(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElement s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
  return out;
}

void check_field(const Ring& ring, const FieldElement& c) {
  if (!(c.field() == ring->field())) throw ContextMismatch("coefficient is not in the ring's field");
}

// Recursive-descent parser for polynomial text.
class Parser {
 public:
  Parser(Ring ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const auto n = integer();
      if (!n) fail("expected exponent");
      base = base.pow(static_cast<int>(*n));
    }
    return base;
  }

  std::optional<long> integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string literal(text_.substr(start, pos_ - start));
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        literal += "/" + std::string(text_.substr(dstart, pos_ - dstart));
      }
      mpq_class q(literal);
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return Polynomial::constant(ring_, FieldElement(ring_->field(), q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character");
  }

  Ring ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  std::sort(terms.begin(), terms.end(), DescendingTerms{order});
  for (auto& t : terms) {
    if (t.mono.nvars() != ring_->nvars()) throw ContextMismatch("monomial variable count differs from ring");
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      check_field(ring_, t.coeff);
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c) {
  Polynomial p(ring);
  check_field(ring, c);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::constant(Ring ring, long c) { return constant(ring, ring->scalar(c)); }

Polynomial Polynomial::variable(Ring ring, std::size_t index, unsigned power) {
  Polynomial p(ring);
  p.terms_.push_back(Term{Monomial::variable(ring->nvars(), index, power), ring->one()});
  return p;
}

Polynomial Polynomial::variable(Ring ring, const std::string& name, unsigned power) {
  const auto idx = ring->index_of(name);
  if (!idx) throw InputError("unknown variable '" + name + "'");
  return variable(ring, *idx, power);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& mono, const FieldElement& c) {
  if (mono.nvars() != ring->nvars()) throw ContextMismatch("monomial variable count differs from ring");
  Polynomial p(ring);
  check_field(ring, c);
  if (!c.is_zero()) p.terms_.push_back(Term{mono, c});
  return p;
}

Polynomial Polynomial::parse(Ring ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return ring_->zero();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_, "polynomial addition");
  terms_ = merge(ring_->order(), terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_, "polynomial subtraction");
  terms_ = merge(ring_->order(), terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, t.coeff * c});
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != ring_->nvars()) throw ContextMismatch("evaluation point has wrong length");
  FieldElement sum = ring_->zero();
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  require_same_ring(ring_, divisor.ring_, "exact division");
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& order = ring_->order();
  std::vector<Term> quotient;
  std::vector<Term> rem = terms_;
  const Term& lead = divisor.leading_term();
  const FieldElement lead_inv = lead.coeff.inverse();
  while (!rem.empty()) {
    const Term& top = rem.front();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    Term q{top.mono / lead.mono, top.coeff * lead_inv};
    std::vector<Term> sub;
    sub.reserve(divisor.size());
    for (const auto& t : divisor.terms_) sub.push_back(Term{t.mono * q.mono, t.coeff * q.coeff});
    rem = merge(order, rem, sub, true);
    quotient.push_back(std::move(q));
  }
  Polynomial out(ring_);
  out.terms_ = std::move(quotient);  // produced in strictly descending order
  return out;
}

Polynomial Polynomial::divide_or_throw(const Polynomial& divisor) const {
  auto q = exact_divide(divisor);
  if (!q) throw NotDivisible("'" + to_string() + "' is not divisible by '" + divisor.to_string() + "'");
  return *std::move(q);
}

Polynomial Polynomial::map_to(const Ring& target) const {
  if (same_ring(ring_, target)) return *this;
  if (!(ring_->field() == target->field())) throw ContextMismatch("cannot map between different fields");
  std::vector<std::optional<std::size_t>> where(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) where[i] = target->index_of(ring_->names()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<int> exps(target->nvars());
  for (const auto& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!where[i]) throw ContextMismatch("variable '" + ring_->names()[i] + "' does not exist in target ring");
      exps[*where[i]] = static_cast<int>(t.mono[i]);
    }
    out.push_back(Term{Monomial(target->nvars(), exps), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring->names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += monomial_to_string(ring_, t.mono);
    }
  }
  return out;
}

std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b) {
  const auto& order = a.ring()->order();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = order.compare_unchecked(a.terms()[i].mono, b.terms()[i].mono);
    if (c != 0) return c;
    const auto sa = a.terms()[i].coeff.to_string(), sb = b.terms()[i].coeff.to_string();
    if (sa != sb) return sa <=> sb;
  }
  return a.size() <=> b.size();
}

}  // namespace detsat
