#include "singkit/ring.hpp"

#include <set>

namespace singkit {

namespace {

int revlex_tiebreak(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare_range(OrderKind kind, const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  if (kind == OrderKind::Lex) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  int da = 0, db = 0;
  if (lo == 0 && hi == a.size()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) {
    bool a_bigger = kind == OrderKind::DegRevLex ? da > db : da < db;
    return a_bigger ? 1 : -1;
  }
  return revlex_tiebreak(a, b, lo, hi);
}

const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::DegRevLex: return "global";
    case OrderKind::NegDegRevLex: return "local";
    case OrderKind::Lex: return "lex";
  }
  return "?";
}

}  // namespace

TermOrder TermOrder::block(OrderKind first, std::size_t split, OrderKind second) {
  TermOrder o(first);
  o.second_ = second;
  o.split_ = split;
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (split_ == 0 || split_ >= a.size()) return compare_range(first_, a, b, 0, a.size());
  int c = compare_range(first_, a, b, 0, split_);
  if (c != 0) return c;
  return compare_range(second_, a, b, split_, a.size());
}

bool TermOrder::is_local() const {
  return first_ == OrderKind::NegDegRevLex && (split_ == 0 || second_ == OrderKind::NegDegRevLex);
}

bool TermOrder::is_global() const {
  return first_ != OrderKind::NegDegRevLex && (split_ == 0 || second_ != OrderKind::NegDegRevLex);
}

std::string TermOrder::name() const {
  if (split_ == 0) return kind_name(first_);
  return std::string("block(") + kind_name(first_) + ":" + std::to_string(split_) + "," + kind_name(second_) + ")";
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars, TermOrder order, Field field) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || v == "theta" || !seen.insert(v).second) {
      throw Error(Errc::InvalidArgument, "invalid or duplicate variable name '" + v + "'");
    }
  }
  if (vars.size() > kMaxVars) {
    throw Error(Errc::InvalidArgument, "too many variables: " + std::to_string(vars.size()));
  }
  return std::make_shared<const Ring>(Ring{std::move(vars), order, std::move(field)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->order == b->order && a->field == b->field;
}

std::string join_vars(const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  return s;
}

}  // namespace singkit
