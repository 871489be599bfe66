#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singkit/field.hpp"
#include "singkit/monomial.hpp"

namespace singkit {

enum class OrderKind {
  DegRevLex,     ///< global: larger total degree first, ties reverse lexicographic
  NegDegRevLex,  ///< local: smaller total degree first, ties reverse lexicographic
  Lex,
};

/// A monomial order, optionally split into two blocks (variables [0, split) are
/// compared first with `first`; ties are broken on [split, n) with `second`).
class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder global() { return TermOrder(OrderKind::DegRevLex); }
  static TermOrder local() { return TermOrder(OrderKind::NegDegRevLex); }
  static TermOrder lex() { return TermOrder(OrderKind::Lex); }
  static TermOrder block(OrderKind first, std::size_t split, OrderKind second);

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool is_local() const;
  bool is_global() const;
  bool is_block() const { return split_ != 0; }
  OrderKind kind() const { return first_; }

  std::string name() const;
  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.first_ == b.first_ && a.second_ == b.second_ && a.split_ == b.split_;
  }

 private:
  explicit TermOrder(OrderKind k) : first_(k) {}
  OrderKind first_ = OrderKind::NegDegRevLex;
  OrderKind second_ = OrderKind::NegDegRevLex;
  std::size_t split_ = 0;
};

/// Variables, order and coefficient field shared by a family of polynomials.
struct Ring {
  std::vector<std::string> vars;
  TermOrder order;
  Field field;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, TermOrder order, Field field = Field());
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Comma-separated variable names; "x,y,z".
std::string join_vars(const std::vector<std::string>& vars);

}  // namespace singkit
