#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detsat/field.hpp"
#include "detsat/monomial.hpp"

namespace detsat {

class RingContext;
/// Rings are shared, immutable and compared structurally.
using Ring = std::shared_ptr<const RingContext>;

/// Polynomial ring k[v_1, ..., v_N] with a fixed variable order, a coefficient
/// field and a default monomial order.
class RingContext {
 public:
  static Ring make(std::vector<std::string> names, Field field,
                   MonomialOrder order = MonomialOrder::grevlex());
  /// k[x1, ..., x{count}].
  static Ring standard(std::size_t count, Field field, MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Ring with_order(MonomialOrder order) const;
  /// Appends a fresh variable; the returned ring eliminates it.
  Ring with_elimination_variable(const std::string& base_name) const;

  FieldElement zero() const { return FieldElement(field_, 0); }
  FieldElement one() const { return FieldElement(field_, 1); }
  FieldElement scalar(long value) const { return FieldElement(field_, value); }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  RingContext(std::vector<std::string> names, Field field, MonomialOrder order);

  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

bool same_ring(const Ring& a, const Ring& b);
/// Throws ContextMismatch unless same_ring(a, b).
void require_same_ring(const Ring& a, const Ring& b, const char* what);

}  // namespace detsat
