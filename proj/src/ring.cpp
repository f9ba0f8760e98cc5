#include "detsat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "detsat/errors.hpp"

namespace detsat {

RingContext::RingContext(std::vector<std::string> names, Field field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {}

Ring RingContext::make(std::vector<std::string> names, Field field, MonomialOrder order) {
  if (names.empty()) throw InputError("a ring needs at least one variable");
  if (names.size() > kMaxVariables)
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  return Ring(new RingContext(std::move(names), field, order));
}

Ring RingContext::standard(std::size_t count, Field field, MonomialOrder order) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names), field, order);
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Ring RingContext::with_order(MonomialOrder order) const { return make(names_, field_, order); }

Ring RingContext::with_elimination_variable(const std::string& base_name) const {
  std::string name = base_name;
  while (index_of(name)) name += "_";
  auto names = names_;
  names.push_back(name);
  return make(std::move(names), field_, MonomialOrder::elimination(1u << (names_.size())));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!same_ring(a, b)) throw ContextMismatch(std::string(what) + ": operands live in different rings");
}

}  // namespace detsat
