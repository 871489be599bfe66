#include "singkit/standard_basis.hpp"

#include <algorithm>
#include <set>

namespace singkit {

namespace {

Poly make_monic(const Poly& p) {
  if (p.is_zero() || p.lead_coeff().is_one()) return p;
  return p * p.lead_coeff().inverse();
}

struct Relation {
  Poly unit;
  std::vector<Poly> q;
};

// One element of the reducer set T together with its expression in f and G.
struct Reducer {
  Poly poly;
  int ecart;
  Relation rel;
};

Poly weak_nf(const Poly& f, const std::vector<Poly>& G, Relation* rel) {
  const RingPtr& ring = f.ring() ? f.ring() : (G.empty() ? RingPtr() : G.front().ring());
  Poly h = f;
  if (rel) {
    rel->unit = Poly::constant(ring, FieldElement(1));
    rel->q.assign(G.size(), Poly(ring));
  }
  if (h.is_zero()) return h;
  const bool local = !ring->order.is_global();
  std::vector<Reducer> T;
  T.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    Reducer r{G[i], G[i].ecart(), {}};
    if (rel) {
      r.rel.unit = Poly(ring);
      r.rel.q.assign(G.size(), Poly(ring));
      r.rel.q[i] = Poly::constant(ring, FieldElement(-1));
    }
    T.push_back(std::move(r));
  }
  while (!h.is_zero()) {
    const Monomial& lm = h.lead_monomial();
    int best = -1;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!T[i].poly.lead_monomial().divides(lm)) continue;
      if (best < 0 || T[i].ecart < T[best].ecart) {
        best = static_cast<int>(i);
        if (!local || T[i].ecart == 0) break;
      }
    }
    if (best < 0) break;
    int eh = local ? h.ecart() : 0;
    if (local && T[best].ecart > eh) {
      Reducer r{h, eh, {}};
      if (rel) r.rel = *rel;
      T.push_back(std::move(r));
    }
    const Reducer& g = T[best];
    Monomial m = g.poly.lead_monomial().quotient_of(lm);
    FieldElement c = -(h.lead_coeff() / g.poly.lead_coeff());
    if (rel) {
      // h = u f - sum q_i g_i is maintained with the sign convention of NormalFormRelation
      rel->unit.add_scaled(c, &m, g.rel.unit);
      for (std::size_t i = 0; i < G.size(); ++i) rel->q[i].add_scaled(c, &m, g.rel.q[i]);
    }
    h.add_scaled(c, &m, g.poly);
  }
  return h;
}

bool has_divisor(const std::vector<Poly>& G, const Monomial& m) {
  for (const auto& g : G)
    if (g.lead_monomial().divides(m)) return true;
  return false;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

}  // namespace

StandardBasis::StandardBasis(RingPtr ring, std::vector<Poly> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

std::vector<Monomial> StandardBasis::staircase() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.lead_monomial());
  return out;
}

bool StandardBasis::lead_ideal_contains(const Monomial& m) const { return has_divisor(elements_, m); }

bool StandardBasis::is_unit_ideal() const {
  for (const auto& g : elements_)
    if (g.lead_monomial().is_one()) return true;
  return false;
}

Poly mora_normal_form(const Poly& f, const std::vector<Poly>& G) {
  for (const auto& g : G) {
    if (f.ring() && g.ring() && !same_ring(f.ring(), g.ring())) {
      throw Error(Errc::OrderMismatch, "normal form across different rings");
    }
  }
  return weak_nf(f, G, nullptr);
}

NormalFormRelation mora_normal_form_with_relation(const Poly& f, const std::vector<Poly>& G) {
  for (const auto& g : G) {
    if (f.ring() && g.ring() && !same_ring(f.ring(), g.ring())) {
      throw Error(Errc::OrderMismatch, "normal form across different rings");
    }
  }
  Relation rel;
  Poly h = weak_nf(f, G, &rel);
  return {rel.unit, rel.q, h};
}

Poly full_normal_form(const Poly& f, const std::vector<Poly>& G) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) return f;
  std::vector<Term<FieldElement>> done;
  Poly h = f;
  while (!h.is_zero()) {
    const Monomial& lm = h.lead_monomial();
    const Poly* red = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && g.lead_monomial().divides(lm)) {
        red = &g;
        break;
      }
    }
    if (red) {
      Monomial m = red->lead_monomial().quotient_of(lm);
      FieldElement c = -(h.lead_coeff() / red->lead_coeff());
      h.add_scaled(c, &m, *red);
    } else {
      done.push_back(h.lead());
      h = h.tail();
    }
  }
  return Poly::from_sorted(ring, std::move(done));
}

StandardBasis standard_basis(const Ideal& ideal, const BasisOptions& options) {
  const RingPtr& ring = ideal.ring;
  const bool global = ring->order.is_global();
  std::vector<Poly> S;
  std::vector<int> sugar;
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    Poly m = make_monic(g);
    if (m.lead_monomial().is_one()) return StandardBasis(ring, {Poly::constant(ring, FieldElement(1))});
    S.push_back(std::move(m));
    sugar.push_back(S.back().max_degree());
  }

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = S[i].lead_monomial().lcm(S[k].lead_monomial());
      int s = std::max(sugar[i] + l.degree() - S[i].lead_monomial().degree(),
                       sugar[k] + l.degree() - S[k].lead_monomial().degree());
      queue.push_back({i, k, l, s});
    }
  };
  for (std::size_t k = 0; k < S.size(); ++k) add_pairs(k);

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring->order.compare(a.lcm, b.lcm);
    if (c != 0) return global ? c < 0 : c > 0;
    return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
  };
  auto is_treated = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return treated.count({a, b}) > 0;
  };

  while (!queue.empty()) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
      throw Error(Errc::BudgetExhausted, "standard basis computation exceeded its deadline");
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);
    treated.insert({p.i, p.j});
    const Monomial& li = S[p.i].lead_monomial();
    const Monomial& lj = S[p.j].lead_monomial();
    if (options.product_criterion && li.coprime(lj)) continue;
    if (options.chain_criterion) {
      bool skip = false;
      for (std::size_t k = 0; k < S.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!S[k].lead_monomial().divides(p.lcm)) continue;
        if (is_treated(p.i, k) && is_treated(p.j, k)) skip = true;
      }
      if (skip) continue;
    }
    Poly sp = S[p.i].mul_term(li.quotient_of(p.lcm), FieldElement(1));
    Monomial mj = lj.quotient_of(p.lcm);
    sp.add_scaled(FieldElement(-1), &mj, S[p.j]);
    Poly h = weak_nf(sp, S, nullptr);
    if (h.is_zero()) continue;
    h = make_monic(h);
    if (h.lead_monomial().is_one()) return StandardBasis(ring, {Poly::constant(ring, FieldElement(1))});
    S.push_back(std::move(h));
    sugar.push_back(p.sugar);
    add_pairs(S.size() - 1);
  }

  // minimal basis: drop elements whose lead monomial is divisible by another's
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < S.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
      if (i == j || !S[j].lead_monomial().divides(S[i].lead_monomial())) continue;
      redundant = S[j].lead_monomial() != S[i].lead_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(S[i]);
  }
  if (global) {
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly lead = Poly::from_sorted(ring, {minimal[i].lead()});
      minimal[i] = make_monic(lead + full_normal_form(minimal[i].tail(), others));
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return ring->order.greater(a.lead_monomial(), b.lead_monomial());
  });
  return StandardBasis(ring, std::move(minimal));
}

bool ideal_membership(const Poly& f, const StandardBasis& sb) {
  return mora_normal_form(f.ring() ? f : Poly(sb.ring()), sb.elements()).is_zero();
}

bool ideal_membership(const Poly& f, const Ideal& ideal) { return ideal_membership(f, standard_basis(ideal)); }

bool radical_membership(const Poly& f, const Ideal& ideal) {
  if (!ideal.ring->order.is_global()) {
    throw Error(Errc::OrderMismatch, "radical membership needs a global order");
  }
  std::vector<std::string> vars = ideal.ring->vars;
  std::string z = "z_aux";
  while (ideal.ring->index_of(z)) z += "_";
  vars.push_back(z);
  RingPtr ext = make_ring(vars, TermOrder::global(), ideal.ring->field);
  std::vector<int> map(ideal.ring->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) gens.push_back(remap_variables(g, ext, map));
  Poly zf = Poly::variable(ext, vars.size() - 1) * remap_variables(f, ext, map);
  gens.push_back(Poly::constant(ext, FieldElement(1)) - zf);
  return standard_basis(Ideal(ext, gens)).is_unit_ideal();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop) {
  const RingPtr& ring = ideal.ring;
  std::vector<bool> dropped(ring->nvars(), false);
  for (std::size_t d : drop) dropped.at(d) = true;
  std::vector<std::string> order_vars, kept_vars;
  std::vector<int> to_block(ring->nvars()), block_to_kept;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (dropped[i]) {
      to_block[i] = static_cast<int>(order_vars.size());
      order_vars.push_back(ring->vars[i]);
    }
  std::size_t split = order_vars.size();
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!dropped[i]) {
      to_block[i] = static_cast<int>(order_vars.size());
      order_vars.push_back(ring->vars[i]);
      kept_vars.push_back(ring->vars[i]);
    }
  RingPtr kept = make_ring(kept_vars, TermOrder::global(), ring->field);
  if (split == 0) {
    std::vector<Poly> g;
    for (const auto& p : ideal.gens) g.push_back(remap_variables(p, kept, to_block));
    return Ideal(kept, std::move(g));
  }
  RingPtr block = make_ring(order_vars, TermOrder::block(OrderKind::DegRevLex, split, OrderKind::DegRevLex),
                            ring->field);
  std::vector<Poly> gens;
  for (const auto& p : ideal.gens) gens.push_back(remap_variables(p, block, to_block));
  StandardBasis gb = standard_basis(Ideal(block, gens));
  std::vector<int> back(order_vars.size(), -1);
  for (std::size_t i = split; i < order_vars.size(); ++i) back[i] = static_cast<int>(i - split);
  std::vector<Poly> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < split && free; ++i)
        if (t.mono[i] != 0) free = false;
    if (free) out.push_back(remap_variables(g, kept, back));
  }
  return Ideal(kept, std::move(out));
}

std::optional<std::size_t> global_quotient_dimension(const StandardBasis& gb) {
  if (gb.is_unit_ideal()) return 0;
  const std::size_t n = gb.ring()->nvars();
  auto lead = gb.staircase();
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& m : lead)
      if (m.degree() == m[i]) pure = true;
    if (!pure) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (int e = 0;; ++e) {
      m.set(i, e);
      if (has_divisor(gb.elements(), m)) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  return count;
}

}  // namespace singkit
