#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "singkit/polynomial.hpp"

namespace singkit {

/// Parses an expression over the ring's variables (and `theta` when the ring's
/// field is an extension). Accepts integers, a/b, + - * /, ^ with a non-negative
/// integer exponent, parentheses and implicit multiplication ("2xy^2").
/// Identifiers are split by greedy longest match against the declared names.
///
/// `line` is reported in SyntaxError (0 when parsing a standalone string).
Poly parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 0);

FieldElement parse_field_element(std::string_view text, const Field& field);

/// "theta^2 + 1386/6089" -> Q[theta]/(theta^2 + 1386/6089). Empty text gives Q.
Field parse_field(std::string_view minpoly);

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars);

inline std::string coeff_string(const FieldElement& c) { return c.to_string(); }
inline bool coeff_compound(const FieldElement& c) { return c.term_count() > 1; }

template <class C>
std::string to_string(const Polynomial<C>& p);

template <class C>
std::string coeff_string(const Polynomial<C>& c) {
  return to_string(c);
}
template <class C>
bool coeff_compound(const Polynomial<C>& c) {
  return c.size() > 1;
}

/// Terms in descending order: "x^2*y - 3/2*x + (theta + 1)*y^3".
template <class C>
std::string to_string(const Polynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = coeff_string(t.coef);
    bool neg = false;
    if (coeff_compound(t.coef)) {
      c = "(" + c + ")";
    } else if (!c.empty() && c[0] == '-') {
      neg = true;
      c.erase(0, 1);
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << monomial_string(t.mono, p.ring()->vars);
    }
  }
  return os.str();
}

}  // namespace singkit
