#include "singkit/local_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace singkit {

namespace {

bool in_lead_ideal(const std::vector<Poly>& sb, const Monomial& m) {
  for (const auto& g : sb)
    if (g.lead_monomial().divides(m)) return true;
  return false;
}

void monomials_of_degree(std::size_t n, int k, std::vector<Monomial>& out) {
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (n == 0) {
    if (k == 0) out.push_back(m);
    return;
  }
  rec(rec, 0, k);
}

Poly substitute_one(const Poly& p, std::size_t v, const Poly& expr, int bound) {
  bool uses = false;
  for (const auto& t : p.terms())
    if (t.mono[v] != 0) uses = true;
  if (!uses) return p;
  const RingPtr& ring = p.ring();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(i == v ? expr : Poly::variable(ring, i));
  return bound > 0 ? substitute_truncated(p, images, ring, bound) : substitute(p, images, ring);
}

bool uses_variable(const Poly& p, std::size_t v) {
  for (const auto& t : p.terms())
    if (t.mono[v] != 0) return true;
  return false;
}

}  // namespace

struct LocalAlgebra::State {
  Ideal ideal;
  StandardBasis sb;
  bool artinian = false;
  std::vector<Monomial> kbase;
  int bound = 0;

  std::once_flag table_once;
  std::unordered_map<Monomial, Vector, MonomialHash> table;

  void build_table();
  const Vector* lookup(const Monomial& m) const {
    auto it = table.find(m);
    return it == table.end() ? nullptr : &it->second;
  }
};

void LocalAlgebra::State::build_table() {
  const std::size_t n = ideal.ring->nvars();
  const std::size_t dim = kbase.size();
  std::vector<Monomial> all;
  for (int k = 0; k < bound; ++k) monomials_of_degree(n, k, all);
  const TermOrder& order = ideal.ring->order;
  std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < dim; ++i) index.emplace(kbase[i], i);
  table.reserve(all.size());
  for (const auto& m : all) {
    Vector v(dim);
    auto it = index.find(m);
    if (it != index.end()) {
      v[it->second] = 1;
    } else {
      const Poly* red = nullptr;
      for (const auto& g : sb.elements()) {
        if (g.lead_monomial().divides(m)) {
          red = &g;
          break;
        }
      }
      Monomial q = red->lead_monomial().quotient_of(m);
      const FieldElement& lc = red->lead_coeff();
      for (std::size_t t = 1; t < red->terms().size(); ++t) {
        const auto& term = red->terms()[t];
        Monomial qt = q * term.mono;
        if (qt.degree() >= bound) continue;
        const Vector& w = table.at(qt);
        FieldElement c = -(term.coef / lc);
        for (std::size_t j = 0; j < dim; ++j)
          if (!w[j].is_zero()) v[j] += c * w[j];
      }
    }
    table.emplace(m, std::move(v));
  }
}

LocalAlgebra::LocalAlgebra(const Ideal& ideal) : state_(std::make_shared<State>()) {
  State& s = *state_;
  s.ideal = ideal.with_order(TermOrder::local());
  s.sb = singkit::standard_basis(s.ideal);
  const std::size_t n = s.ideal.ring->nvars();
  if (s.sb.is_unit_ideal()) {
    s.artinian = true;
    s.bound = 0;
    return;
  }
  s.artinian = true;
  for (std::size_t i = 0; i < n && s.artinian; ++i) {
    bool pure = false;
    for (const auto& g : s.sb.elements()) {
      const Monomial& lm = g.lead_monomial();
      if (lm.degree() == lm[i]) pure = true;
    }
    s.artinian = pure;
  }
  if (!s.artinian) return;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      s.kbase.push_back(m);
      return;
    }
    for (int e = 0;; ++e) {
      m.set(i, e);
      if (in_lead_ideal(s.sb.elements(), m)) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  const TermOrder& order = s.ideal.ring->order;
  std::sort(s.kbase.begin(), s.kbase.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  for (const auto& b : s.kbase) s.bound = std::max(s.bound, b.degree() + 1);
}

const Ideal& LocalAlgebra::ideal() const { return state_->ideal; }
const RingPtr& LocalAlgebra::ring() const { return state_->ideal.ring; }
const StandardBasis& LocalAlgebra::standard_basis() const { return state_->sb; }
bool LocalAlgebra::is_artinian() const { return state_->artinian; }

std::optional<std::size_t> LocalAlgebra::dimension() const {
  if (!state_->artinian) return std::nullopt;
  return state_->kbase.size();
}

const std::vector<Monomial>& LocalAlgebra::kbase() const {
  if (!state_->artinian) throw Error(Errc::NotArtinian, "quotient is not finite-dimensional");
  return state_->kbase;
}

int LocalAlgebra::nilpotency_bound() const {
  if (!state_->artinian) throw Error(Errc::NotArtinian, "quotient is not finite-dimensional");
  return state_->bound;
}

Vector LocalAlgebra::coordinates(const Poly& g) const {
  const auto& kb = kbase();
  State& s = *state_;
  std::call_once(s.table_once, [&] { s.build_table(); });
  Vector out(kb.size());
  for (const auto& t : g.terms()) {
    if (t.mono.degree() >= s.bound) continue;
    const Vector* w = s.lookup(t.mono);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!(*w)[j].is_zero()) out[j] += t.coef * (*w)[j];
  }
  return out;
}

Poly LocalAlgebra::from_coordinates(const Vector& v) const {
  const auto& kb = kbase();
  std::vector<Term<FieldElement>> terms;
  for (std::size_t j = 0; j < kb.size(); ++j)
    if (!v.at(j).is_zero()) terms.push_back({kb[j], v[j]});
  return Poly(ring(), std::move(terms));
}

Poly LocalAlgebra::reduced_normal_form(const Poly& g) const {
  if (g.ring() && g.ring()->vars != ring()->vars) throw Error(Errc::OrderMismatch, "variables differ");
  Vector v = coordinates(g);
  const auto& kb = kbase();
  std::vector<Term<FieldElement>> terms;
  for (std::size_t j = 0; j < kb.size(); ++j)
    if (!v[j].is_zero()) terms.push_back({kb[j], v[j]});
  return Poly(g.ring() ? g.ring() : ring(), std::move(terms));
}

ParamCoeffPoly LocalAlgebra::reduced_normal_form(const ParamCoeffPoly& g) const {
  const auto& kb = kbase();
  State& s = *state_;
  std::call_once(s.table_once, [&] { s.build_table(); });
  std::vector<ParamPoly> out(kb.size());
  for (const auto& t : g.terms()) {
    if (t.mono.degree() >= s.bound) continue;
    const Vector* w = s.lookup(t.mono);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!(*w)[j].is_zero()) out[j] += t.coef * (*w)[j];
  }
  std::vector<Term<ParamPoly>> terms;
  for (std::size_t j = 0; j < kb.size(); ++j)
    if (!out[j].is_zero()) terms.push_back({kb[j], std::move(out[j])});
  return ParamCoeffPoly(g.ring() ? g.ring() : ring(), std::move(terms));
}

Matrix LocalAlgebra::mult_matrix(const Poly& g) const {
  const auto& kb = kbase();
  const int bound = state_->bound;
  Poly gt = g.truncated(bound);
  Matrix m(kb.size(), Vector(kb.size()));
  for (std::size_t j = 0; j < kb.size(); ++j) {
    Vector col = coordinates(gt.mul_term(kb[j], FieldElement(1)).truncated(bound));
    for (std::size_t i = 0; i < kb.size(); ++i) m[i][j] = col[i];
  }
  return m;
}

std::size_t LocalAlgebra::hilbert_function(int k) const {
  if (k < 0) return 0;
  if (state_->sb.is_unit_ideal()) return 0;
  if (state_->artinian) {
    return static_cast<std::size_t>(std::count_if(state_->kbase.begin(), state_->kbase.end(),
                                                  [&](const Monomial& m) { return m.degree() == k; }));
  }
  std::vector<Monomial> all;
  monomials_of_degree(ring()->nvars(), k, all);
  return static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [&](const Monomial& m) {
    return !in_lead_ideal(state_->sb.elements(), m);
  }));
}

std::optional<std::size_t> milnor_number(const Poly& f) { return LocalAlgebra(jacobian_ideal(f)).dimension(); }

std::optional<std::size_t> tjurina_number(const Poly& f) { return LocalAlgebra(tjurina_ideal(f)).dimension(); }

std::optional<std::size_t> global_tjurina_number(const Poly& f) {
  Ideal t = tjurina_ideal(f);
  std::vector<Poly> gens = t.gens;
  return global_quotient_dimension(standard_basis(Ideal(t.ring, gens).with_order(TermOrder::global())));
}

LocalInvariants local_invariants_at(const Poly& f, const std::vector<FieldElement>& point) {
  Poly g = translate(f, point);
  // the value at the point is irrelevant for the singularity type
  g -= Poly::constant(g.ring(), g.constant_term());
  return {milnor_number(g), tjurina_number(g)};
}

AnnihilatorReport annihilator_check(const Poly& f) {
  LocalAlgebra q(jacobian_ideal(f));
  LocalAlgebra t(tjurina_ideal(f));
  AnnihilatorReport r;
  r.mu = q.kbase().size();
  r.tau = t.kbase().size();
  Poly fl = f.in_ring(q.ring());
  Matrix m = q.mult_matrix(fl);
  r.dim_ann = r.mu - rank(m);
  // kbase()[0] is 1; the maximal ideal is spanned by the remaining classes
  bool kills_m = true;
  for (std::size_t j = 1; j < r.mu && kills_m; ++j)
    for (std::size_t i = 0; i < r.mu; ++i)
      if (!m[i][j].is_zero()) kills_m = false;
  r.equals_maximal_ideal = r.mu >= 1 && r.tau + 1 == r.mu && r.dim_ann + 1 == r.mu && kills_m;
  Ideal mj = maximal_ideal_times(q.ideal());
  StandardBasis sb = standard_basis(mj);
  r.mf_in_mJ = true;
  for (std::size_t i = 0; i < q.ring()->nvars() && r.mf_in_mJ; ++i) {
    r.mf_in_mJ = ideal_membership(Poly::variable(q.ring(), i) * fl, sb);
  }
  return r;
}

bool is_quasihomogeneous(const Poly& f) {
  LocalAlgebra q(jacobian_ideal(f));
  if (!q.is_artinian()) throw Error(Errc::NotArtinian, "non-isolated singularity");
  return ideal_membership(f.in_ring(q.ring()), q.standard_basis());
}

Embedding minimal_embedding(const Ideal& input) {
  Ideal I = input.with_order(TermOrder::local());
  const RingPtr& R = I.ring;
  const std::size_t n = R->nvars();
  std::vector<Poly> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(g);
  std::vector<std::optional<Poly>> images(n);
  std::optional<int> bound;
  auto get_bound = [&]() -> int {
    if (!bound) {
      LocalAlgebra a(I);
      if (!a.is_artinian()) {
        throw Error(Errc::SubstitutionDiverged, "self-referential substitution in a non-Artinian quotient");
      }
      bound = std::max(1, a.nilpotency_bound());
    }
    return *bound;
  };

  while (true) {
    int gi = -1;
    std::size_t var = 0;
    FieldElement c;
    for (std::size_t v = n; v-- > 0 && gi < 0;) {
      if (images[v]) continue;
      Monomial lin = Monomial::variable(n, v);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        FieldElement cv = gens[k].coeff(lin);
        if (!cv.is_zero()) {
          gi = static_cast<int>(k);
          var = v;
          c = cv;
          break;
        }
      }
    }
    if (gi < 0) break;
    Poly g = gens[static_cast<std::size_t>(gi)];
    gens.erase(gens.begin() + gi);
    Poly lin = Poly::monomial(R, Monomial::variable(n, var), c);
    Poly expr = (lin - g) * c.inverse();  // var = expr modulo the ideal
    if (uses_variable(expr, var)) {
      int N = get_bound();
      Poly e = expr.truncated(N);
      for (int it = 0; it <= N + 1; ++it) {
        Poly next = substitute_one(expr, var, e, N);
        if (next == e) break;
        e = next;
      }
      if (uses_variable(e, var)) throw Error(Errc::SubstitutionDiverged, "substitution did not stabilize");
      expr = e;
    }
    for (auto& h : gens) h = substitute_one(h, var, expr, -1);
    for (auto& im : images)
      if (im) im = substitute_one(*im, var, expr, -1);
    images[var] = expr;
  }

  Embedding out;
  std::vector<int> map(n, -1);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) {
    if (images[v]) continue;
    map[v] = static_cast<int>(names.size());
    names.push_back(R->vars[v]);
    out.kept.push_back(v);
  }
  RingPtr small = make_ring(names, TermOrder::local(), R->field);
  std::vector<Poly> small_gens;
  for (const auto& g : gens)
    if (!g.is_zero()) small_gens.push_back(remap_variables(g, small, map));
  out.ideal = Ideal(small, small_gens);
  for (std::size_t v = 0; v < n; ++v) {
    out.images.push_back(images[v] ? remap_variables(*images[v], small, map)
                                   : Poly::variable(small, static_cast<std::size_t>(map[v])));
  }

  // two-sided check in the original ring: I == (gens) + (s_v - image_v)
  std::vector<Poly> other = gens;
  for (std::size_t v = 0; v < n; ++v)
    if (images[v]) other.push_back(Poly::variable(R, v) - *images[v]);
  StandardBasis sb_i = standard_basis(I);
  StandardBasis sb_o = standard_basis(Ideal(R, other));
  for (const auto& g : other)
    if (!ideal_membership(g, sb_i)) throw Error(Errc::SubstitutionDiverged, "embedding is not contained in the ideal");
  for (const auto& g : I.gens)
    if (!ideal_membership(g, sb_o)) throw Error(Errc::SubstitutionDiverged, "embedding loses generators");
  return out;
}

std::string dimension_string(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "inf"; }

}  // namespace singkit
