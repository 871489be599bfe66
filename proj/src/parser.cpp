#include "singkit/parser.hpp"

#include <cctype>

namespace singkit {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line) : s_(text), ring_(ring), line_(line) {}

  Poly parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    Poly p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      if (neg) acc -= t; else acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) const { return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Poly d = factor();
        if (d.is_zero()) {
          pos_ = at;
          throw Error(Errc::DivisionByZero, "division by zero in expression");
        }
        if (d.size() != 1 || !d.lead_monomial().is_one()) {
          pos_ = at;
          fail("only division by a constant is supported");
        }
        acc = acc * d.lead_coeff().inverse();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 5) fail("exponent too large");
      base = power(base, std::stoi(digits));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational q(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(ring_, FieldElement(q));
    }
    if (ident_start(c)) return identifiers();
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  // A maximal run of identifier characters may hold several names ("xy^2" is x*y^2).
  Poly identifiers() {
    std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && ident_char(s_[end])) ++end;
    Poly acc = Poly::constant(ring_, FieldElement(1));
    std::size_t at = start;
    while (at < end) {
      std::size_t best = 0;
      int best_index = -2;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        const std::string& v = ring_->vars[i];
        if (v.size() > best && v.size() <= end - at && s_.compare(at, v.size(), v) == 0) {
          best = v.size();
          best_index = static_cast<int>(i);
        }
      }
      if (!ring_->field.is_rational() && 5 > best && s_.compare(at, 5, "theta") == 0 && at + 5 <= end) {
        best = 5;
        best_index = -1;
      }
      if (best == 0) {
        pos_ = at;
        throw Error(Errc::UnknownVariable,
                    "unknown variable '" + std::string(s_.substr(at, end - at)) + "' at column " +
                        std::to_string(at + 1) + (line_ ? " of line " + std::to_string(line_) : ""));
      }
      Poly v = best_index == -1 ? Poly::constant(ring_, FieldElement::theta(ring_->field))
                                : Poly::variable(ring_, static_cast<std::size_t>(best_index));
      at += best;
      // an exponent binds to the last name of the run only
      if (at == end) {
        pos_ = end;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          std::size_t es = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (es == pos_) fail("exponent must be a non-negative integer");
          std::string digits(s_.substr(es, pos_ - es));
          if (digits.size() > 5) fail("exponent too large");
          v = power(v, std::stoi(digits));
        }
      }
      acc = acc * v;
    }
    pos_ = std::max(pos_, end);
    return acc;
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line) {
  return Parser(text, ring, line).parse();
}

FieldElement parse_field_element(std::string_view text, const Field& field) {
  RingPtr ring = make_ring({}, TermOrder::global(), field);
  Poly p = parse_polynomial(text, ring);
  if (p.is_zero()) return FieldElement();
  return p.lead_coeff();
}

Field parse_field(std::string_view minpoly) {
  if (minpoly.find_first_not_of(" \t") == std::string_view::npos) return Field();
  // theta is reserved for field generators, so parse over a stand-in variable
  std::string text(minpoly);
  for (auto at = text.find("theta"); at != std::string::npos; at = text.find("theta", at)) text.replace(at, 5, "T_");
  RingPtr ring = make_ring({"T_"}, TermOrder::global());
  Poly p = parse_polynomial(text, ring);
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "zero minimal polynomial");
  std::vector<Rational> c(static_cast<std::size_t>(p.max_degree()) + 1);
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.mono[0])] = t.coef.rational_value();
  return Field::extension(UPoly(std::move(c)));
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace singkit
