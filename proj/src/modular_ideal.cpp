#include "singkit/modular_ideal.hpp"

#include <algorithm>

#include "singkit/catalog.hpp"

namespace singkit {

namespace {

Rational a_of(long p, long q, long r) { return Rational(p * q * r - q * r - p * r - p * q); }

Rational c_product(int p, int q, int r, int i) {
  Rational a = a_of(p, q, r);
  if (a == 0) throw Error(Errc::ParabolicBase, "a(p,q,r) = 0");
  if (i < 2 || i > p) throw Error(Errc::IndexOutOfRange, "coefficient index out of range");
  Rational num = 1;
  for (int k = 1; k <= i; ++k) num *= a_of(p - k + 1, q, r);
  Rational den = 1;
  for (int k = 2; k <= i; ++k) den *= k;
  for (int k = 0; k < i - 2; ++k) den *= a;
  Rational out = num / den;
  out.canonicalize();
  return out;
}

// k with 1/k + 1/q + 1/r = 1, if it is a positive integer
bool unit_sum_hit(long bound, long q, long r) {
  long den = q * r - q - r;
  if (den <= 0 || (q * r) % den != 0) return false;
  long k = q * r / den;
  return k >= 1 && k <= bound;
}

Poly mono(const RingPtr& R, std::vector<std::pair<std::size_t, int>> exps, const Rational& c) {
  Monomial m(R->nvars());
  for (auto [i, e] : exps) m.set(i, e);
  return Poly::monomial(R, m, FieldElement(c));
}

}  // namespace

Rational coefficient_a(int p, int q, int r) { return a_of(p, q, r); }
Rational coefficient_c(int p, int q, int r, int i) { return c_product(p, q, r, i); }
Rational coefficient_d(int p, int q, int r, int i) { return c_product(q, p, r, i); }
Rational coefficient_e(int p, int q, int r, int i) { return c_product(r, q, p, i); }

Ideal reduced_modular_ideal(int p, int q, int r) {
  if (a_of(p, q, r) == 0) throw Error(Errc::ParabolicBase, "a(p,q,r) = 0");
  RingPtr R = make_ring({"t1", "u1", "v1"}, TermOrder::local());
  Rational cp = coefficient_c(p, q, r, p), dq = coefficient_d(p, q, r, q), er = coefficient_e(p, q, r, r);
  std::vector<Poly> g;
  g.push_back(mono(R, {{1, 1}, {2, 1}}, 1) - mono(R, {{0, p - 1}}, cp));
  g.push_back(mono(R, {{0, 1}, {2, 1}}, 1) - mono(R, {{1, q - 1}}, dq));
  g.push_back(mono(R, {{0, 1}, {1, 1}}, 1) - mono(R, {{2, r - 1}}, er));
  return Ideal(R, g);
}

ModularIdealData modular_ideal(int p, int q, int r) {
  ModularIdealData out;
  out.p = p;
  out.q = q;
  out.r = r;
  out.a = a_of(p, q, r);
  if (out.a == 0) throw Error(Errc::ParabolicBase, "a(p,q,r) = 0");
  out.c.assign(static_cast<std::size_t>(p) + 1, Rational(0));
  out.d.assign(static_cast<std::size_t>(q) + 1, Rational(0));
  out.e.assign(static_cast<std::size_t>(r) + 1, Rational(0));
  for (int i = 2; i <= p; ++i) out.c[i] = coefficient_c(p, q, r, i);
  for (int i = 2; i <= q; ++i) out.d[i] = coefficient_d(p, q, r, i);
  for (int i = 2; i <= r; ++i) out.e[i] = coefficient_e(p, q, r, i);

  std::vector<std::string> vars;
  for (int i = 1; i <= p; ++i) vars.push_back("t" + std::to_string(i));
  for (int i = 1; i < q; ++i) vars.push_back("u" + std::to_string(i));
  for (int i = 1; i < r; ++i) vars.push_back("v" + std::to_string(i));
  RingPtr R = make_ring(vars, TermOrder::local());
  const std::size_t t0 = 0, u0 = static_cast<std::size_t>(p), v0 = u0 + static_cast<std::size_t>(q - 1);
  Rational a2 = out.a * out.a;
  std::vector<Poly> g;
  for (int i = 2; i <= p; ++i) g.push_back(mono(R, {{t0 + i - 1, 1}}, a2) - mono(R, {{t0, i}}, out.c[i]));
  for (int i = 2; i < q; ++i) g.push_back(mono(R, {{u0 + i - 1, 1}}, a2) - mono(R, {{u0, i}}, out.d[i]));
  for (int i = 2; i < r; ++i) g.push_back(mono(R, {{v0 + i - 1, 1}}, a2) - mono(R, {{v0, i}}, out.e[i]));
  g.push_back(mono(R, {{u0, 1}, {v0, 1}}, 1) - mono(R, {{t0, p - 1}}, out.c[p]));
  g.push_back(mono(R, {{t0, 1}, {v0, 1}}, 1) - mono(R, {{u0, q - 1}}, out.d[q]));
  g.push_back(mono(R, {{t0, 1}, {u0, 1}}, 1) - mono(R, {{v0, r - 1}}, out.e[r]));
  out.ideal = Ideal(R, g);
  out.reduced = reduced_modular_ideal(p, q, r);
  return out;
}

std::vector<std::string> SubseriesProfile::vanishing() const {
  std::vector<std::string> v;
  if (c_vanishes) v.push_back("c_p");
  if (d_vanishes) v.push_back("d_q");
  if (e_vanishes) v.push_back("e_r");
  return v;
}

SubseriesProfile subseries_profile(int p, int q, int r) {
  SubseriesProfile s;
  s.c_vanishes = unit_sum_hit(p, q, r);
  s.d_vanishes = unit_sum_hit(q, p, r);
  s.e_vanishes = unit_sum_hit(r, p, q);
  s.line_components = int(s.c_vanishes) + int(s.d_vanishes) + int(s.e_vanishes);
  return s;
}

bool in_subseries(int p, int q, int r) {
  int t[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) {
    int k = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
    if (a < b) std::swap(a, b);
    auto s = find_subseries(a, b);
    if (s && k >= s->l) return true;
  }
  return false;
}

}  // namespace singkit
