#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "singkit/error.hpp"
#include "singkit/field.hpp"
#include "singkit/monomial.hpp"
#include "singkit/ring.hpp"

namespace singkit {

template <class T>
bool coef_zero(const T& c) {
  return c.is_zero();
}

template <class C>
struct Term {
  Monomial mono;
  C coef;
};

/// Sparse polynomial with terms sorted strictly descending in the ring's order.
/// No zero coefficients and no repeated monomials are ever stored.
///
/// C is FieldElement for ordinary polynomials, or Polynomial<FieldElement> for
/// polynomials whose coefficients live in a parameter ring (x local, parameters
/// global, never a flat ring).
template <class C>
class Polynomial {
 public:
  using Coeff = C;

  /// The zero polynomial of an unspecified ring; it adopts the ring of whatever
  /// it is combined with.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term<C>> terms) : ring_(std::move(ring)) { assign(std::move(terms)); }

  static Polynomial constant(RingPtr ring, C c) {
    Polynomial p(ring);
    if (!coef_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index), C(1)});
    return p;
  }
  static Polynomial monomial(RingPtr ring, Monomial m, C c) {
    Polynomial p(ring);
    if (!coef_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<C>>& terms() const { return terms_; }

  const Term<C>& lead() const {
    if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of zero");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }
  const C& lead_coeff() const { return lead().coef; }

  int max_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int min_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  /// deg(f) - deg(lead(f)); throws ZeroPolynomial.
  int ecart() const { return max_degree() - lead_monomial().degree(); }

  C coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return C();
  }
  C constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coef;
    return C();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return merge(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return merge(o, true); }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const RingPtr& ring = pick_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        C prod = ta.coef * tb.coef;
        auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, prod);
        if (!inserted) it->second += prod;
      }
    }
    std::vector<Term<C>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!coef_zero(c)) terms.push_back({m, std::move(c)});
    Polynomial r(ring);
    r.sort_unique(std::move(terms));
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply every coefficient by a scalar of the coefficient domain.
  friend Polynomial operator*(const Polynomial& p, const C& c) {
    Polynomial r(p.ring_);
    if (coef_zero(c)) return r;
    r.terms_.reserve(p.size());
    for (const auto& t : p.terms_) {
      C v = t.coef * c;
      if (!coef_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }

  Polynomial mul_term(const Monomial& m, const C& c) const {
    Polynomial r(ring_);
    if (coef_zero(c)) return r;
    r.terms_.reserve(size());
    for (const auto& t : terms_) {
      C v = t.coef * c;
      if (!coef_zero(v)) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;
  }

  /// *this += c * m * g in one merge pass; D is the coefficient type of g and
  /// must satisfy C * D -> C.
  template <class D>
  Polynomial& add_scaled(const C& c, const Monomial* m, const Polynomial<D>& g) {
    if (g.is_zero() || coef_zero(c)) return *this;
    if (!ring_) ring_ = g.ring();
    check_ring(g.ring());
    const TermOrder& order = ring_->order;
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + g.size());
    auto it = terms_.begin();
    for (const auto& tg : g.terms()) {
      Monomial gm = m ? tg.mono * *m : tg.mono;
      while (it != terms_.end() && order.greater(it->mono, gm)) out.push_back(std::move(*it++));
      C v = c * tg.coef;
      if (it != terms_.end() && it->mono == gm) {
        v += it->coef;
        ++it;
      }
      if (!coef_zero(v)) out.push_back({std::move(gm), std::move(v)});
    }
    while (it != terms_.end()) out.push_back(std::move(*it++));
    terms_ = std::move(out);
    return *this;
  }

  /// Drops every term of total degree >= bound.
  Polynomial truncated(int bound) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (t.mono.degree() < bound) r.terms_.push_back(t);
    return r;
  }

  /// Same terms viewed in another ring with the same number of variables.
  Polynomial in_ring(RingPtr ring) const {
    if (ring_ && ring->nvars() != ring_->nvars()) {
      throw Error(Errc::InvalidArgument, "ring change with different variable count");
    }
    std::vector<Term<C>> t = terms_;
    Polynomial r(std::move(ring));
    r.sort_unique(std::move(t));
    return r;
  }

  /// Removes the leading term (requires nonzero).
  Polynomial tail() const {
    Polynomial r(ring_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Unchecked: the caller guarantees order and uniqueness.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term<C>> terms) {
    Polynomial r(std::move(ring));
    r.terms_ = std::move(terms);
    return r;
  }

 private:
  static const RingPtr& pick_ring(const RingPtr& a, const RingPtr& b) {
    if (a && b && !same_ring(a, b)) throw Error(Errc::OrderMismatch, "polynomials from different rings");
    return a ? a : b;
  }
  void check_ring(const RingPtr& other) const {
    if (other && ring_ && !same_ring(ring_, other)) {
      throw Error(Errc::OrderMismatch, "polynomials from different rings");
    }
  }
  Polynomial& merge(const Polynomial& g, bool negate) {
    if (g.is_zero()) return *this;
    if (!ring_) ring_ = g.ring_;
    check_ring(g.ring_);
    const TermOrder& order = ring_->order;
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + g.size());
    auto it = terms_.begin();
    for (const auto& tg : g.terms_) {
      while (it != terms_.end() && order.greater(it->mono, tg.mono)) out.push_back(std::move(*it++));
      if (it != terms_.end() && it->mono == tg.mono) {
        C v = std::move(it->coef);
        if (negate) v -= tg.coef; else v += tg.coef;
        ++it;
        if (!coef_zero(v)) out.push_back({tg.mono, std::move(v)});
      } else {
        out.push_back({tg.mono, negate ? -tg.coef : tg.coef});
      }
    }
    while (it != terms_.end()) out.push_back(std::move(*it++));
    terms_ = std::move(out);
    return *this;
  }

  void assign(std::vector<Term<C>> terms) {
    std::vector<Term<C>> nz;
    nz.reserve(terms.size());
    for (auto& t : terms)
      if (!coef_zero(t.coef)) nz.push_back(std::move(t));
    sort_unique(std::move(nz));
  }
  void sort_unique(std::vector<Term<C>> terms) {
    if (!ring_) throw Error(Errc::InvalidArgument, "polynomial terms need a ring");
    const TermOrder& order = ring_->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<C>& a, const Term<C>& b) { return order.greater(a.mono, b.mono); });
    terms_.clear();
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coef += t.coef;
        if (coef_zero(terms_.back().coef)) terms_.pop_back();
      } else if (!coef_zero(t.coef)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  RingPtr ring_;
  std::vector<Term<C>> terms_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using Poly = Polynomial<FieldElement>;
/// Polynomial in the parameters (global order) used as a coefficient.
using ParamPoly = Polynomial<FieldElement>;
/// Polynomial in x whose coefficients are parameter polynomials.
using ParamCoeffPoly = Polynomial<ParamPoly>;

/// Total derivative with respect to variable `index`.
Poly derivative(const Poly& f, std::size_t index);
/// Substitutes polynomials (all in `target`) for every variable of f's ring.
Poly substitute(const Poly& f, const std::vector<Poly>& images, const RingPtr& target);
/// As substitute, but drops terms of degree >= bound after every product.
Poly substitute_truncated(const Poly& f, const std::vector<Poly>& images, const RingPtr& target, int bound);
/// Raises p to a non-negative power, optionally truncating at degree `bound` (<0 = none).
Poly power(const Poly& p, int exponent, int bound = -1);
/// Replaces every coefficient by its image in `field`.
Poly change_field(const Poly& f, const RingPtr& target);
/// x_i -> x_i + shift_i.
Poly translate(const Poly& f, const std::vector<FieldElement>& shift);
/// Moves variable i of f's ring to variable index_map[i] of `target`; index_map[i] < 0
/// requires that variable to be absent from f.
Poly remap_variables(const Poly& f, const RingPtr& target, const std::vector<int>& index_map);
/// Evaluates all variables.
FieldElement evaluate(const Poly& f, const std::vector<FieldElement>& point);
/// Linear part coefficients (d f / d x_i at 0).
std::vector<FieldElement> linear_part(const Poly& f);

}  // namespace singkit
