#include "singkit/polynomial.hpp"

#include <map>

namespace singkit {

namespace {

Poly mul_trunc(const Poly& a, const Poly& b, int bound) {
  if (bound < 0) return a * b;
  if (a.is_zero() || b.is_zero()) return Poly(a.ring() ? a.ring() : b.ring());
  int amin = a.min_degree(), bmin = b.min_degree();
  std::vector<Term<FieldElement>> keep_a, keep_b;
  for (const auto& t : a.terms())
    if (t.mono.degree() + bmin < bound) keep_a.push_back(t);
  for (const auto& t : b.terms())
    if (t.mono.degree() + amin < bound) keep_b.push_back(t);
  Poly pa = Poly::from_sorted(a.ring(), std::move(keep_a));
  Poly pb = Poly::from_sorted(b.ring(), std::move(keep_b));
  return (pa * pb).truncated(bound);
}

Poly substitute_impl(const Poly& f, const std::vector<Poly>& images, const RingPtr& target, int bound) {
  if (!f.ring()) return Poly(target);
  if (images.size() != f.ring()->nvars()) {
    throw Error(Errc::InvalidArgument, "substitution needs one image per variable");
  }
  std::vector<std::vector<Poly>> powers(images.size());
  auto pw = [&](std::size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, FieldElement(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mul_trunc(cache.back(), images[i], bound));
    return cache[e];
  };
  Poly result(target);
  for (const auto& t : f.terms()) {
    if (bound >= 0) {
      int low = 0;
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (images[i].is_zero()) { low = bound; break; }
        low += t.mono[i] * images[i].min_degree();
      }
      if (low >= bound) continue;
    }
    Poly prod = Poly::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i) {
      if (t.mono[i] != 0) prod = mul_trunc(prod, pw(i, t.mono[i]), bound);
    }
    result += prod;
  }
  return result;
}

}  // namespace

Poly derivative(const Poly& f, std::size_t index) {
  std::vector<Term<FieldElement>> out;
  for (const auto& t : f.terms()) {
    int e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back({m, t.coef * FieldElement(e)});
  }
  return Poly(f.ring(), std::move(out));
}

Poly substitute(const Poly& f, const std::vector<Poly>& images, const RingPtr& target) {
  return substitute_impl(f, images, target, -1);
}

Poly substitute_truncated(const Poly& f, const std::vector<Poly>& images, const RingPtr& target, int bound) {
  return substitute_impl(f, images, target, bound);
}

Poly power(const Poly& p, int exponent, int bound) {
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  Poly result = Poly::constant(p.ring(), FieldElement(1));
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1) result = mul_trunc(result, base, bound);
    exponent >>= 1;
    if (exponent) base = mul_trunc(base, base, bound);
  }
  return result;
}

Poly change_field(const Poly& f, const RingPtr& target) {
  std::vector<Term<FieldElement>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, t.coef.in_field(target->field)});
  return Poly(target, std::move(out));
}

Poly translate(const Poly& f, const std::vector<FieldElement>& shift) {
  const RingPtr& ring = f.ring();
  if (!ring) return f;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    images.push_back(Poly::variable(ring, i) + Poly::constant(ring, shift.at(i)));
  }
  return substitute(f, images, ring);
}

FieldElement evaluate(const Poly& f, const std::vector<FieldElement>& point) {
  FieldElement acc;
  std::map<std::pair<std::size_t, int>, FieldElement> cache;
  for (const auto& t : f.terms()) {
    FieldElement v = t.coef;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      auto key = std::make_pair(i, e);
      auto it = cache.find(key);
      if (it == cache.end()) {
        FieldElement p = 1;
        for (int k = 0; k < e; ++k) p *= point.at(i);
        it = cache.emplace(key, p).first;
      }
      v *= it->second;
    }
    acc += v;
  }
  return acc;
}

Poly remap_variables(const Poly& f, const RingPtr& target, const std::vector<int>& index_map) {
  std::vector<Term<FieldElement>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map.at(i) < 0) throw Error(Errc::InvalidArgument, "dropped variable occurs in polynomial");
      m.set(static_cast<std::size_t>(index_map[i]), t.mono[i]);
    }
    out.push_back({m, t.coef});
  }
  return Poly(target, std::move(out));
}

std::vector<FieldElement> linear_part(const Poly& f) {
  std::size_t n = f.ring() ? f.ring()->nvars() : 0;
  std::vector<FieldElement> out(n);
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i] == 1) out[i] = t.coef;
  }
  return out;
}

}  // namespace singkit
