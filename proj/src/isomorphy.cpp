#include "singkit/isomorphy.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "singkit/catalog.hpp"
#include "singkit/modular_ideal.hpp"
#include "singkit/parser.hpp"

namespace singkit {

namespace {

using Clock = std::chrono::steady_clock;

Ideal adapt_field(const Ideal& I, const Field& F) {
  if (I.ring->field == F) return I;
  if (I.ring->field.is_rational()) return I.with_field(F);
  if (F.is_rational()) return I;  // the map is rational; the ideal's field hosts it
  throw Error(Errc::FieldMismatch, "ideal over " + I.ring->field.to_string() + ", map over " + F.to_string());
}

template <class C>
Polynomial<C> mul_trunc(const Polynomial<C>& a, const Polynomial<C>& b, int bound) {
  if (a.is_zero() || b.is_zero()) return Polynomial<C>(a.ring() ? a.ring() : b.ring());
  int amin = a.min_degree(), bmin = b.min_degree();
  std::vector<Term<C>> ka, kb;
  for (const auto& t : a.terms())
    if (t.mono.degree() + bmin < bound) ka.push_back(t);
  for (const auto& t : b.terms())
    if (t.mono.degree() + amin < bound) kb.push_back(t);
  auto pa = Polynomial<C>::from_sorted(a.ring(), std::move(ka));
  auto pb = Polynomial<C>::from_sorted(b.ring(), std::move(kb));
  return (pa * pb).truncated(bound);
}

std::size_t linear_rank(const std::vector<Poly>& images, const std::vector<Poly>& ideal_gens, std::size_t n) {
  Matrix m;
  for (const auto& p : images) m.push_back(linear_part(p));
  for (const auto& g : ideal_gens)
    if (g.constant_term().is_zero()) m.push_back(linear_part(g));
  for (auto& row : m) row.resize(n);
  return m.empty() ? 0 : rank(m);
}

Poly normal_form_in(const LocalAlgebra& B, const Poly& g) {
  Poly h = g.in_ring(B.ring());
  if (B.is_artinian()) return B.reduced_normal_form(h);
  return mora_normal_form(h, B.standard_basis().elements());
}

Poly apply_truncated(const AlgebraMap& map, const Poly& g, int bound) {
  if (bound <= 0) return map.apply(g);
  return substitute_truncated(g, map.images, map.target, bound);
}

ParamPoly determinant(std::vector<std::vector<ParamPoly>> m, const RingPtr& R) {
  const std::size_t n = m.size();
  if (n == 0) return ParamPoly::constant(R, FieldElement(1));
  if (n == 1) return m[0][0];
  ParamPoly det(R);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<ParamPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ParamPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    ParamPoly term = m[0][c] * determinant(std::move(minor), R);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

// --- parameter solving -------------------------------------------------------

struct SolveState {
  Clock::time_point deadline;
  std::size_t original_vars = 0;  ///< variables after these are auxiliary (solved last)
};

struct BudgetOut {};

std::vector<Rational> specialization_sequence() {
  std::vector<Rational> s;
  for (int k = 1; k <= 4; ++k) {
    s.push_back(Rational(k));
    s.push_back(Rational(-k));
  }
  s.push_back(Rational(1, 2));
  s.push_back(Rational(-1, 2));
  s.push_back(Rational(1, 3));
  s.push_back(Rational(-1, 3));
  return s;
}

Ideal with_generator(const Ideal& I, const Poly& g) {
  Ideal out = I;
  out.gens.push_back(g);
  return out;
}

Poly var_minus(const RingPtr& R, std::size_t v, const FieldElement& value) {
  return Poly::variable(R, v) - Poly::constant(R, value);
}

// Minimal polynomial of variable v in the finite quotient R/(gb): coefficients low to high.
std::vector<FieldElement> minimal_polynomial(const StandardBasis& gb, std::size_t v,
                                             const std::vector<Monomial>& standard) {
  const RingPtr& R = gb.ring();
  std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
  for (std::size_t i = 0; i < standard.size(); ++i) pos.emplace(standard[i], i);
  auto coords = [&](const Poly& p) {
    Vector out(standard.size());
    for (const auto& t : p.terms()) out[pos.at(t.mono)] = t.coef;
    return out;
  };
  std::vector<Vector> powers;
  Poly cur = full_normal_form(Poly::constant(R, FieldElement(1)), gb.elements());
  Poly x = Poly::variable(R, v);
  while (true) {
    powers.push_back(coords(cur));
    Matrix m(standard.size(), Vector(powers.size()));
    for (std::size_t i = 0; i < standard.size(); ++i)
      for (std::size_t k = 0; k < powers.size(); ++k) m[i][k] = powers[k][i];
    auto ker = kernel(m, powers.size());
    if (!ker.empty()) {
      Vector c = ker[0];
      FieldElement top = c.back();
      for (auto& e : c) e /= top;
      return c;
    }
    cur = full_normal_form(cur * x, gb.elements());
  }
}

std::vector<Monomial> standard_monomials(const StandardBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  std::vector<Monomial> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0;; ++e) {
      m.set(i, e);
      if (gb.lead_ideal_contains(m)) break;
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  rec(rec, 0);
  return out;
}

UPoly to_upoly(const std::vector<FieldElement>& c) {
  std::vector<Rational> q;
  for (const auto& e : c) q.push_back(e.rational_value());
  return UPoly(std::move(q));
}

SolveResult solve_rec(const Ideal& I, SolveState& st, int depth) {
  if (Clock::now() > st.deadline) throw BudgetOut{};
  SolveResult res;
  res.field = I.ring->field;
  BasisOptions bo;
  bo.deadline = st.deadline;
  StandardBasis gb;
  try {
    gb = standard_basis(I, bo);
  } catch (const Error& e) {
    if (e.code() == Errc::BudgetExhausted) throw BudgetOut{};
    throw;
  }
  if (gb.is_unit_ideal()) {
    res.status = SolveStatus::Impossible;
    res.detail = "empty variety";
    return res;
  }
  const RingPtr& R = I.ring;
  const std::size_t n = R->nvars();
  auto dim = global_quotient_dimension(gb);
  if (dim && *dim == 1) {
    for (std::size_t v = 0; v < n; ++v) {
      Poly nf = full_normal_form(Poly::variable(R, v), gb.elements());
      res.point.push_back(nf.constant_term());
    }
    res.status = SolveStatus::Found;
    return res;
  }
  if (depth > 64) {
    res.status = SolveStatus::BudgetExhausted;
    res.detail = "recursion limit";
    return res;
  }
  if (!dim) {
    // positive dimension: specialize a variable from an independent set of the lead ideal
    auto lead = gb.staircase();
    std::vector<bool> in_set(n, false);
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < n; ++v) order.push_back(v);
    std::optional<std::size_t> pick;
    for (std::size_t v : order) {
      in_set[v] = true;
      bool ok = true;
      for (const auto& m : lead) {
        bool inside = true;
        for (std::size_t k = 0; k < n && inside; ++k)
          if (m[k] != 0 && !in_set[k]) inside = false;
        if (inside) ok = false;
      }
      if (!ok) in_set[v] = false;
      else if (!pick || (*pick >= st.original_vars && v < st.original_vars)) pick = v;
    }
    if (!pick) {
      res.status = SolveStatus::Impossible;
      res.detail = "no independent variable";
      return res;
    }
    // failed specializations certify nothing
    SolveResult last;
    last.status = SolveStatus::BudgetExhausted;
    for (const auto& s : specialization_sequence()) {
      SolveResult r = solve_rec(with_generator(I, var_minus(R, *pick, FieldElement(s))), st, depth + 1);
      if (r.status == SolveStatus::Found) return r;
      if (r.status != SolveStatus::Impossible) last = r;
    }
    last.detail = "specialization of " + R->vars[*pick] + " failed";
    return last;
  }

  std::vector<Monomial> standard = standard_monomials(gb);
  struct Candidate {
    std::size_t v;
    std::vector<FieldElement> minpoly;
  };
  std::vector<Candidate> cands;
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v) order.push_back(v);
  std::stable_partition(order.begin(), order.end(), [&](std::size_t v) { return v < st.original_vars; });
  for (std::size_t v : order) {
    auto mp = minimal_polynomial(gb, v, standard);
    if (mp.size() <= 2) continue;  // determined (linear) already
    cands.push_back({v, mp});
  }
  if (cands.empty()) {
    // every variable is determined, but the quotient is not reduced: read the point off
    for (std::size_t v = 0; v < n; ++v) {
      auto mp = minimal_polynomial(gb, v, standard);
      res.point.push_back(-mp[0]);
    }
    res.status = SolveStatus::Found;
    return res;
  }
  const bool rational = R->field.is_rational();
  if (rational) {
    for (const auto& c : cands) {
      UPoly u = to_upoly(c.minpoly);
      for (const auto& root : rational_roots(u)) {
        SolveResult r = solve_rec(with_generator(I, var_minus(R, c.v, FieldElement(root))), st, depth + 1);
        if (r.status == SolveStatus::Found) return r;
      }
    }
    // adjoin one root of an eliminant, smallest degree first; a larger one may be primitive
    std::vector<std::pair<UPoly, std::size_t>> elim;
    for (const auto& c : cands) elim.emplace_back(to_upoly(c.minpoly).squarefree_part().monic(), c.v);
    std::stable_sort(elim.begin(), elim.end(),
                     [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
    SolveResult last;
    last.status = SolveStatus::UnsupportedRootDegree;
    last.detail = "smallest eliminant has degree " + std::to_string(elim.front().first.degree());
    for (const auto& [eliminant, v] : elim) {
      if (eliminant.degree() > 4) break;
      UPoly m = eliminant;
      for (int attempt = 0; attempt < 4; ++attempt) {
        try {
          Field E = Field::extension(m);
          Ideal IE = I.with_field(E);
          SolveResult r = solve_rec(with_generator(IE, var_minus(IE.ring, v, FieldElement::theta(E))), st, depth + 1);
          if (r.status == SolveStatus::Found) return r;
          if (r.status == SolveStatus::UnsupportedRootDegree) last = r;
          break;
        } catch (const ZeroDivisorError& z) {
          // the eliminant factors: continue with the exposed factor
          UPoly f = z.factor().monic();
          if (f.degree() < 1 || f.degree() >= m.degree()) throw;
          if (f.degree() == 1) {
            SolveResult r = solve_rec(with_generator(I, var_minus(R, v, FieldElement(-f.coeff(0)))), st, depth + 1);
            if (r.status == SolveStatus::Found) return r;
            break;
          }
          m = f;
        }
      }
    }
    return last;
  }
  // over an extension only linear eliminants can be solved
  res.status = SolveStatus::UnsupportedRootDegree;
  res.detail = "a second radical would be needed for " + R->vars[cands[0].v];
  return res;
}

// --- Smith form helpers -----------------------------------------------------

bool exact_root(const Rational& value, int e, Rational& out) {
  if (e == 1) {
    out = value;
    return true;
  }
  if (value < 0 && e % 2 == 0) return false;
  mpz_class num = abs(value.get_num()), den = value.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e))) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e))) return false;
  out = Rational(value < 0 ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

FieldElement power(const FieldElement& b, long long e) {
  FieldElement base = e < 0 ? b.inverse() : b;
  FieldElement r(1);
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

Rational rpow(const Rational& b, long long e) {
  Rational base = e < 0 ? Rational(1) / b : b;
  Rational r = 1;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Poly AlgebraMap::apply(const Poly& g) const { return substitute(g, images, target); }

AlgebraMap identity_map(const RingPtr& source, const RingPtr& target) {
  AlgebraMap m{source, target, {}};
  for (const auto& v : source->vars) {
    auto idx = target->index_of(v);
    if (!idx) throw Error(Errc::UnknownVariable, v);
    m.images.push_back(Poly::variable(target, *idx));
  }
  return m;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Isomorphism: return "isomorphism";
    case Verdict::Surjection: return "surjection";
    case Verdict::Failure: return "failure";
  }
  return "?";
}

VerificationReport verify(const AlgebraMap& map, const Ideal& IA, const Ideal& IB) {
  const Field& F = map.target->field;
  Ideal B = adapt_field(IB, F);
  adapt_field(IA, F);
  if (B.ring->vars != map.target->vars) throw Error(Errc::InvalidArgument, "map target and ideal variables differ");
  if (map.images.size() != IA.ring->nvars()) throw Error(Errc::InvalidArgument, "one image per source variable");
  LocalAlgebra b(B);
  VerificationReport rep;
  rep.dim_target = b.dimension();
  rep.dim_source = LocalAlgebra(IA).dimension();
  int bound = b.is_artinian() ? b.nilpotency_bound() : 0;
  rep.contained = true;
  for (std::size_t k = 0; k < IA.gens.size(); ++k) {
    Poly nf = normal_form_in(b, apply_truncated(map, IA.gens[k], bound));
    if (!nf.is_zero() && rep.contained) {
      rep.contained = false;
      rep.witness = "generator " + std::to_string(k + 1) + " maps to " + to_string(nf) + " modulo the target ideal";
    }
    rep.containment.push_back(std::move(nf));
  }
  rep.required_rank = map.target->nvars();
  rep.linear_rank = linear_rank(map.images, B.gens, rep.required_rank);
  bool surjective = rep.linear_rank == rep.required_rank;
  if (!rep.contained) {
    rep.verdict = Verdict::Failure;
  } else if (!surjective) {
    rep.verdict = Verdict::Failure;
    rep.witness = "linear part has rank " + std::to_string(rep.linear_rank) + " < " + std::to_string(rep.required_rank);
  } else if (rep.dim_source && rep.dim_target && *rep.dim_source == *rep.dim_target) {
    rep.verdict = Verdict::Isomorphism;
  } else {
    rep.verdict = Verdict::Surjection;
  }
  return rep;
}

VerificationReport check_ambient_isomorphism(const AlgebraMap& map, const Ideal& IA, const Ideal& IB) {
  const std::size_t n = map.target->nvars();
  if (IA.ring->nvars() != n || map.images.size() != n) throw Error(Errc::NotAmbient, "variable counts differ");
  Matrix lin;
  for (const auto& p : map.images) {
    auto row = linear_part(p);
    row.resize(n);
    lin.push_back(row);
  }
  if (rank(lin) != n) throw Error(Errc::NotAmbient, "linear part is singular");
  const Field& F = map.target->field;
  Ideal B = adapt_field(IB, F).with_order(TermOrder::local());
  adapt_field(IA, F);
  if (B.ring->vars != map.target->vars) throw Error(Errc::InvalidArgument, "map target and ideal variables differ");
  StandardBasis sbB = standard_basis(B);
  VerificationReport rep;
  rep.required_rank = n;
  rep.linear_rank = n;
  rep.contained = true;
  std::vector<Poly> image_gens;
  for (std::size_t k = 0; k < IA.gens.size(); ++k) {
    Poly img = map.apply(IA.gens[k]).in_ring(B.ring);
    image_gens.push_back(img);
    Poly nf = mora_normal_form(img, sbB.elements());
    if (!nf.is_zero() && rep.contained) {
      rep.contained = false;
      rep.witness = "generator " + std::to_string(k + 1) + " of the source leaves the target ideal";
    }
    rep.containment.push_back(std::move(nf));
  }
  StandardBasis sbA = standard_basis(Ideal(B.ring, image_gens));
  rep.reverse_ok = true;
  for (std::size_t k = 0; k < B.gens.size(); ++k) {
    Poly nf = mora_normal_form(B.gens[k], sbA.elements());
    if (!nf.is_zero() && rep.reverse_ok) {
      rep.reverse_ok = false;
      if (rep.witness.empty()) rep.witness = "generator " + std::to_string(k + 1) + " of the target is not in the image ideal";
    }
    rep.reverse.push_back(std::move(nf));
  }
  LocalAlgebra a(Ideal(B.ring, image_gens));
  rep.dim_source = a.dimension();
  rep.dim_target = LocalAlgebra(B).dimension();
  rep.verdict = rep.contained && rep.reverse_ok ? Verdict::Isomorphism : Verdict::Failure;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

Ansatz build_ansatz(const RingPtr& source, const LocalAlgebra& B, std::vector<Monomial> basis,
                    const std::function<bool(std::size_t, std::size_t)>& on) {
  Ansatz a;
  a.source = source;
  a.target = B.ring();
  a.basis = std::move(basis);
  const std::size_t m = source->nvars(), r = a.basis.size();
  std::vector<std::string> names;
  a.param_of.assign(m, std::vector<int>(r, -1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!on(i, j)) continue;
      a.param_of[i][j] = static_cast<int>(names.size());
      names.push_back("a" + std::to_string(names.size() + 1));
    }
  }
  if (names.size() >= kMaxVars)
    throw Error(Errc::InvalidArgument, "ansatz needs " + std::to_string(names.size()) + " parameters; give a shape");
  a.params = make_ring(names, TermOrder::global(), B.ring()->field);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Term<ParamPoly>> terms;
    for (std::size_t j = 0; j < r; ++j) {
      int k = a.param_of[i][j];
      if (k >= 0) terms.push_back({a.basis[j], ParamPoly::variable(a.params, static_cast<std::size_t>(k))});
    }
    a.images.emplace_back(a.target, std::move(terms));
  }
  return a;
}

}  // namespace

Ansatz make_ansatz(const RingPtr& source, const LocalAlgebra& B,
                   const std::optional<std::vector<std::vector<bool>>>& mask) {
  std::vector<Monomial> kb = B.kbase();
  return build_ansatz(source, B, kb, [&](std::size_t i, std::size_t j) {
    return mask ? (*mask).at(i).at(j) : !kb[j].is_one();
  });
}

Ansatz shape_ansatz(const RingPtr& source, const LocalAlgebra& B,
                    const std::map<std::string, std::vector<std::string>>& shape) {
  std::vector<std::vector<Monomial>> wanted(source->nvars());
  std::vector<Monomial> basis;
  for (const auto& [var, monos] : shape) {
    auto i = source->index_of(var);
    if (!i) throw Error(Errc::InvalidArgument, "shape names unknown source variable " + var);
    for (const auto& text : monos) {
      Poly p = parse_polynomial(text, B.ring());
      if (p.size() != 1) throw Error(Errc::InvalidArgument, "shape entry is not a monomial: " + text);
      if (p.lead_monomial().is_one()) throw Error(Errc::InvalidArgument, "shape entry 1 is not in the maximal ideal");
      wanted[*i].push_back(p.lead_monomial());
      if (std::find(basis.begin(), basis.end(), p.lead_monomial()) == basis.end()) basis.push_back(p.lead_monomial());
    }
  }
  const TermOrder& order = B.ring()->order;
  std::sort(basis.begin(), basis.end(), [&](const Monomial& x, const Monomial& y) { return order.greater(x, y); });
  return build_ansatz(source, B, basis, [&](std::size_t i, std::size_t j) {
    return std::find(wanted[i].begin(), wanted[i].end(), basis[j]) != wanted[i].end();
  });
}

ParamCoeffPoly reduced_image(const Poly& g, const LocalAlgebra& B, const Ansatz& ansatz) {
  const int N = B.nilpotency_bound();
  const std::size_t m = ansatz.images.size();
  std::vector<std::vector<ParamCoeffPoly>> powers(m);
  ParamPoly one = ParamPoly::constant(ansatz.params, FieldElement(1));
  auto pw = [&](std::size_t i, int e) -> const ParamCoeffPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ParamCoeffPoly::constant(ansatz.target, one));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(mul_trunc(cache.back(), ansatz.images[i], N));
    return cache[static_cast<std::size_t>(e)];
  };
  ParamCoeffPoly total(ansatz.target);
  for (const auto& t : g.terms()) {
    ParamCoeffPoly prod = ParamCoeffPoly::constant(ansatz.target, ParamPoly::constant(ansatz.params, t.coef));
    for (std::size_t i = 0; i < m && !prod.is_zero(); ++i)
      if (t.mono[i] != 0) prod = mul_trunc(prod, pw(i, t.mono[i]), N);
    total += prod;
  }
  return B.reduced_normal_form(total);
}

Ideal coefficient_ideal(const Ideal& IA, const LocalAlgebra& B, const Ansatz& ansatz) {
  std::vector<ParamPoly> gens;
  for (const auto& g : IA.gens) {
    ParamCoeffPoly red = reduced_image(g, B, ansatz);
    for (const auto& t : red.terms()) gens.push_back(t.coef);
  }
  return Ideal(ansatz.params, gens);
}

std::vector<ParamPoly> linear_minors(const Ansatz& a) {
  const std::size_t n = a.target->nvars(), m = a.source->nvars();
  std::vector<std::vector<ParamPoly>> L(m, std::vector<ParamPoly>(n, ParamPoly(a.params)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < a.basis.size(); ++j) {
      const Monomial& b = a.basis[j];
      if (b.degree() != 1 || a.param_of[i][j] < 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (b[k] == 1) L[i][k] = ParamPoly::variable(a.params, static_cast<std::size_t>(a.param_of[i][j]));
    }
  std::vector<ParamPoly> out;
  if (m < n) return out;
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  while (true) {
    std::vector<std::vector<ParamPoly>> sub;
    for (std::size_t r : rows) sub.push_back(L[r]);
    ParamPoly d = determinant(std::move(sub), a.params);
    if (!d.is_zero()) out.push_back(d);
    // next n-subset of rows
    std::size_t k = n;
    while (k > 0 && rows[k - 1] == m - n + k - 1) --k;
    if (k == 0) break;
    ++rows[k - 1];
    for (std::size_t j = k; j < n; ++j) rows[j] = rows[j - 1] + 1;
  }
  return out;
}

Poly specialize(const ParamCoeffPoly& g, const RingPtr& target, const std::vector<FieldElement>& point) {
  std::vector<Term<FieldElement>> terms;
  for (const auto& t : g.terms()) terms.push_back({t.mono, evaluate(t.coef, point)});
  return Poly(target, std::move(terms));
}

AlgebraMap evaluate_ansatz(const Ansatz& a, const Field& field, const std::vector<FieldElement>& point) {
  RingPtr target = ring_with_field(a.target, field);
  AlgebraMap map{a.source, target, {}};
  for (const auto& im : a.images) map.images.push_back(specialize(im, target, point));
  return map;
}

// ---------------------------------------------------------------------------

std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "found";
    case SolveStatus::Impossible: return "certified-impossible";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
    case SolveStatus::UnsupportedRootDegree: return "unsupported-root-degree";
  }
  return "?";
}

SolveOptions default_solve_options() {
  SolveOptions o;
  if (const char* env = std::getenv("SINGKIT_BUDGET_MS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) o.budget = std::chrono::milliseconds(v);
  }
  return o;
}

SolveResult solve_parameter_system(const Ideal& J, const std::vector<ParamPoly>& minors, const SolveOptions& options) {
  SolveState st;
  st.deadline = Clock::now() + options.budget;
  const RingPtr& P = J.ring;
  const std::size_t n = P->nvars();
  st.original_vars = n;
  std::vector<std::string> vars = P->vars;
  vars.push_back("z_sat");
  RingPtr Pz = make_ring(vars, TermOrder::global(), P->field);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  SolveResult result;
  result.status = SolveStatus::Impossible;
  result.detail = minors.empty() ? "no nonzero minor" : "every minor vanishes on V(J)";
  for (const auto& minor : minors) {
    std::vector<Poly> gens;
    for (const auto& g : J.gens)
      if (!g.is_zero()) gens.push_back(remap_variables(g.in_ring(P), Pz, idx));
    Poly z = Poly::variable(Pz, n);
    gens.push_back(Poly::constant(Pz, FieldElement(1)) - z * remap_variables(minor, Pz, idx));
    SolveResult r;
    try {
      r = solve_rec(Ideal(Pz, gens), st, 0);
    } catch (const BudgetOut&) {
      r.status = SolveStatus::BudgetExhausted;
      r.detail = "budget of " + std::to_string(options.budget.count()) + " ms exhausted";
    }
    if (r.status == SolveStatus::Found) {
      r.point.resize(n);
      return r;
    }
    if (r.status != SolveStatus::Impossible) result = r;
  }
  return result;
}

// ---------------------------------------------------------------------------

SurjectionResult find_surjection(const Ideal& IA, const Ideal& IB, const FindOptions& options) {
  SurjectionResult out;
  Embedding eb = minimal_embedding(IB);
  LocalAlgebra B(eb.ideal);
  if (!B.is_artinian()) throw Error(Errc::NotArtinian, "target algebra is not Artinian");
  Embedding ea = minimal_embedding(IA);
  if (options.require_isomorphism) {
    LocalAlgebra A(ea.ideal);
    auto da = A.dimension(), db = B.dimension();
    if (!da || *da != *db) {
      out.reason = "dimension-mismatch (" + dimension_string(da) + " vs " + dimension_string(db) + ")";
      return out;
    }
  }
  Ansatz ans = options.shape.empty() ? make_ansatz(ea.ideal.ring, B) : shape_ansatz(ea.ideal.ring, B, options.shape);
  out.parameters = ans.params->nvars();
  Ideal J = coefficient_ideal(ea.ideal, B, ans);
  out.coefficient_equations = J.gens.size();
  auto minors = linear_minors(ans);
  SolveResult sol = solve_parameter_system(J, minors, options.solve);
  if (sol.status != SolveStatus::Found) {
    out.reason = std::string(solve_status_name(sol.status)) + (sol.detail.empty() ? "" : ": " + sol.detail);
    return out;
  }
  AlgebraMap small = evaluate_ansatz(ans, sol.field, sol.point);
  // back to the original rings
  RingPtr target = ring_with_field(IB.ring->order.is_local() ? IB.ring : ring_with_order(IB.ring, TermOrder::local()),
                                   sol.field);
  std::vector<int> back(eb.kept.size());
  for (std::size_t j = 0; j < eb.kept.size(); ++j) back[j] = static_cast<int>(eb.kept[j]);
  std::vector<Poly> lifted;
  for (const auto& im : small.images) lifted.push_back(remap_variables(im, target, back));
  AlgebraMap full{IA.ring, target, {}};
  for (const auto& e : ea.images) full.images.push_back(substitute(e.in_ring(ring_with_field(e.ring(), sol.field)), lifted, target));
  VerificationReport rep = verify(full, IA, IB);
  bool good = rep.verdict == Verdict::Isomorphism || (!options.require_isomorphism && rep.verdict == Verdict::Surjection);
  if (!good) throw Error(Errc::InvalidArgument, "solver point fails verification: " + rep.witness);
  out.map = std::move(full);
  out.report = std::move(rep);
  return out;
}

// ---------------------------------------------------------------------------

SmithForm smith_normal_form(const std::vector<std::vector<long long>>& M) {
  const std::size_t k = M.size(), n = k ? M[0].size() : 0;
  SmithForm s;
  s.D = M;
  s.U.assign(k, std::vector<long long>(k, 0));
  s.V.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < k; ++i) s.U[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) s.V[i][i] = 1;
  auto& D = s.D;
  auto row_add = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t j = 0; j < n; ++j) D[dst][j] += f * D[src][j];
    for (std::size_t j = 0; j < k; ++j) s.U[dst][j] += f * s.U[src][j];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t i = 0; i < k; ++i) D[i][dst] += f * D[i][src];
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] += f * s.V[i][src];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(D[a], D[b]);
    std::swap(s.U[a], s.U[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : D) std::swap(r[a], r[b]);
    for (auto& r : s.V) std::swap(r[a], r[b]);
  };
  for (std::size_t t = 0; t < std::min(k, n); ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (!piv || std::llabs(D[i][j]) < std::llabs(D[piv->first][piv->second]))) piv = {{i, j}};
      if (!piv) return s;
      row_swap(t, piv->first);
      col_swap(t, piv->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        row_add(i, t, -(D[i][t] / D[t][t]));
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        col_add(j, t, -(D[t][j] / D[t][t]));
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < k && !bad; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      row_add(t, *bad, 1);
    }
    if (D[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) D[t][j] = -D[t][j];
      for (std::size_t j = 0; j < k; ++j) s.U[t][j] = -s.U[t][j];
    }
  }
  return s;
}

namespace {

// Solves prod_l x_l^(M_il) = K_i over Q or one radical extension; free unknowns are 1.
struct MonomialSolution {
  Field field;
  std::vector<FieldElement> values;
};

// Q[w_1..w_k]/(w_i^(m_i) - R_i) as a simple extension: the minimal polynomial of a
// primitive element and each w_i written in it.
struct Compositum {
  Field field;
  std::vector<FieldElement> roots;
};

Compositum radical_compositum(const std::vector<int>& m, const std::vector<Rational>& R) {
  const std::size_t k = m.size();
  std::size_t N = 1;
  for (int d : m) N *= static_cast<std::size_t>(d);
  if (N > 256) throw Error(Errc::UnsupportedRootDegree, "radical compositum of degree " + std::to_string(N));
  using Vec = std::vector<Rational>;
  auto digits = [&](std::size_t idx) {
    std::vector<int> e(k);
    for (std::size_t i = 0; i < k; ++i) {
      e[i] = static_cast<int>(idx % static_cast<std::size_t>(m[i]));
      idx /= static_cast<std::size_t>(m[i]);
    }
    return e;
  };
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec c(N, Rational(0));
    for (std::size_t i = 0; i < N; ++i) {
      if (a[i] == 0) continue;
      auto ei = digits(i);
      for (std::size_t j = 0; j < N; ++j) {
        if (b[j] == 0) continue;
        auto ej = digits(j);
        Rational f = a[i] * b[j];
        std::size_t idx = 0, stride = 1;
        for (std::size_t t = 0; t < k; ++t) {
          int e = ei[t] + ej[t];
          if (e >= m[t]) {
            e -= m[t];
            f *= R[t];
          }
          idx += static_cast<std::size_t>(e) * stride;
          stride *= static_cast<std::size_t>(m[t]);
        }
        c[idx] += f;
      }
    }
    return c;
  };
  auto unit = [&](std::size_t t) {
    Vec v(N, Rational(0));
    std::size_t stride = 1;
    for (std::size_t i = 0; i < t; ++i) stride *= static_cast<std::size_t>(m[i]);
    v[stride] = 1;
    return v;
  };
  for (int attempt = 1; attempt <= 8; ++attempt) {
    Vec theta(N, Rational(0));
    for (std::size_t t = 0; t < k; ++t) {
      Vec u = unit(t);
      for (std::size_t i = 0; i < N; ++i) theta[i] += Rational(static_cast<long>(t) * attempt + 1) * u[i];
    }
    std::vector<Vec> pw{Vec(N, Rational(0))};
    pw[0][0] = 1;
    for (std::size_t d = 1; d <= N; ++d) pw.push_back(mul(pw.back(), theta));
    Matrix krylov(N, Vector(N + 1));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t d = 0; d <= N; ++d) krylov[i][d] = FieldElement(pw[d][i]);
    Matrix square(N, Vector(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t d = 0; d < N; ++d) square[i][d] = krylov[i][d];
    if (rank(square) < N) continue;  // not primitive
    Vector rhs(N);
    for (std::size_t i = 0; i < N; ++i) rhs[i] = -krylov[i][N];
    auto low = solve(square, rhs);
    std::vector<Rational> c;
    for (const auto& e : *low) c.push_back(e.rational_value());
    c.push_back(Rational(1));
    Compositum out;
    out.field = Field::extension(UPoly(std::move(c)));
    FieldElement th = FieldElement::theta(out.field);
    for (std::size_t t = 0; t < k; ++t) {
      Vec u = unit(t);
      Vector b(N);
      for (std::size_t i = 0; i < N; ++i) b[i] = FieldElement(u[i]);
      auto coords = solve(square, b);
      FieldElement v(0), tp(1);
      for (std::size_t d = 0; d < N; ++d) {
        v += (*coords)[d] * tp;
        tp *= th;
      }
      out.roots.push_back(v);
    }
    return out;
  }
  throw Error(Errc::UnsupportedRootDegree, "no primitive element found");
}

MonomialSolution solve_monomial_system(const std::vector<std::vector<long long>>& M, const std::vector<Rational>& K,
                                       std::size_t unknowns, bool allow_compositum) {
  SmithForm s = smith_normal_form(M);
  const std::size_t rows = M.size();
  // w_i^(d_i) = R_i, the free w_i are 1; x_l = prod_i w_i^(V_li)
  std::vector<std::size_t> radical;
  std::vector<int> degrees;
  std::vector<Rational> values;
  std::vector<Rational> w_rational(unknowns, Rational(1));
  for (std::size_t i = 0; i < rows; ++i) {
    Rational R = 1;
    for (std::size_t j = 0; j < rows; ++j) R *= rpow(K[j], s.U[i][j]);
    long long d = s.D[i][i];
    if (d == 0) throw Error(Errc::UnsupportedRootDegree, "degenerate exponent system");
    int e = static_cast<int>(d);
    Rational root;
    for (; e >= 1; --e)
      if (d % e == 0 && exact_root(R, e, root)) break;
    int m = static_cast<int>(d / e);
    if (m == 1) {
      w_rational[i] = root;
    } else {
      radical.push_back(i);
      degrees.push_back(m);
      values.push_back(root);
    }
  }
  MonomialSolution out;
  std::vector<FieldElement> w;
  for (std::size_t i = 0; i < unknowns; ++i) w.push_back(FieldElement(w_rational[i]));
  if (radical.size() == 1) {
    std::vector<Rational> c(static_cast<std::size_t>(degrees[0]) + 1, Rational(0));
    c[0] = -values[0];
    c.back() = 1;
    out.field = Field::extension(UPoly(c));
    w[radical[0]] = FieldElement::theta(out.field);
  } else if (radical.size() > 1) {
    if (!allow_compositum) throw Error(Errc::UnsupportedRootDegree, "two radicals would be needed");
    Compositum comp = radical_compositum(degrees, values);
    out.field = comp.field;
    for (std::size_t t = 0; t < radical.size(); ++t) w[radical[t]] = comp.roots[t];
  }
  for (std::size_t l = 0; l < unknowns; ++l) {
    FieldElement v(1);
    for (std::size_t i = 0; i < unknowns; ++i) v *= power(w[i], s.V[l][i]);
    out.values.push_back(v);
  }
  return out;
}

}  // namespace

DiagonalSolution solve_diagonal(int p, int q, int r) {
  Rational a = coefficient_a(p, q, r);
  if (a == 0) throw Error(Errc::ParabolicBase, "a(p,q,r) = 0");
  SubseriesProfile prof = subseries_profile(p, q, r);
  if (prof.line_components >= 2) throw Error(Errc::SymmetricException, "two or more coefficients vanish");
  Rational C[3] = {coefficient_c(p, q, r, p), coefficient_d(p, q, r, q), coefficient_e(p, q, r, r)};
  const int deg[3] = {p, q, r};
  // rows: -C_i w_i^(deg_i - 1) = deg_i * lambda * (product of the other two); the last column is lambda
  std::vector<std::vector<long long>> M;
  std::vector<Rational> K;
  for (int i = 0; i < 3; ++i) {
    if (C[i] == 0) continue;
    std::vector<long long> row(4, -1);
    row[static_cast<std::size_t>(i)] = deg[i] - 1;
    row[3] = 1;
    M.push_back(row);
    Rational k = Rational(-deg[i]) / C[i];
    k.canonicalize();
    K.push_back(k);
  }
  // lambda = 1 first; off the sub-series a free lambda needs at most one radical
  std::optional<MonomialSolution> fixed, free;
  std::vector<std::vector<long long>> M3 = M;
  for (auto& row : M3) row.pop_back();
  try {
    fixed = solve_monomial_system(M3, K, 3, prof.line_components != 0);
    fixed->values.push_back(FieldElement(1));
  } catch (const Error& e) {
    if (e.code() != Errc::UnsupportedRootDegree) throw;
  }
  if ((!fixed || fixed->field.degree() > 1) && prof.line_components == 0) {
    try {
      free = solve_monomial_system(M, K, 4, true);
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedRootDegree || fixed) throw;
    }
  }
  if (!fixed && !free) throw Error(Errc::UnsupportedRootDegree, "two radicals would be needed");
  const MonomialSolution& sol = free && (!fixed || free->field.degree() < fixed->field.degree()) ? *free : *fixed;
  DiagonalSolution out;
  out.field = sol.field;
  out.alpha = sol.values[0];
  out.beta = sol.values[1];
  out.gamma = sol.values[2];
  out.lambda = sol.values[3];
  RingPtr X = xyz_ring(sol.field);
  Poly target = Poly::monomial(X, Monomial{1, 1, 1}, out.lambda);
  for (int i = 0; i < 3; ++i)
    if (C[i] != 0) target += Poly::monomial(X, Monomial::variable(3, static_cast<std::size_t>(i), deg[i]), FieldElement(1));
  out.target = target;
  RingPtr src = reduced_modular_ideal(p, q, r).ring;
  out.map = AlgebraMap{src, X, {}};
  for (std::size_t l = 0; l < 3; ++l) out.map.images.push_back(Poly::monomial(X, Monomial::variable(3, l), sol.values[l]));
  return out;
}

DiagonalSolution symmetric_exception_map(int p, int q, int r) {
  if (coefficient_a(p, q, r) == 0) throw Error(Errc::ParabolicBase, "a(p,q,r) = 0");
  SubseriesProfile prof = subseries_profile(p, q, r);
  if (prof.line_components < 2) throw Error(Errc::InvalidArgument, "not a symmetric exception");
  RingPtr X = xyz_ring();
  RingPtr src = reduced_modular_ideal(p, q, r).ring;
  DiagonalSolution out;
  out.alpha = out.beta = out.gamma = out.lambda = FieldElement(1);
  out.map = AlgebraMap{src, X, {}};
  Poly xyz = Poly::monomial(X, Monomial{1, 1, 1}, FieldElement(1));
  if (prof.line_components == 3) {
    out.target = xyz;
    for (std::size_t l = 0; l < 3; ++l) out.map.images.push_back(Poly::variable(X, l));
    return out;
  }
  const bool vanish[3] = {prof.c_vanishes, prof.d_vanishes, prof.e_vanishes};
  const int deg[3] = {p, q, r};
  std::size_t k = 0;
  while (vanish[k]) ++k;
  Rational C = k == 0 ? coefficient_c(p, q, r, p) : k == 1 ? coefficient_d(p, q, r, q) : coefficient_e(p, q, r, r);
  // w_k -> x, the other two -> alpha*y, z with -C = deg_k * alpha
  Rational alpha = -C / deg[k];
  alpha.canonicalize();
  out.target = Poly::monomial(X, Monomial::variable(3, 0, deg[k]), FieldElement(1)) + xyz;
  out.map.images.assign(3, Poly(X));
  out.map.images[k] = Poly::variable(X, 0);
  bool first = true;
  for (std::size_t l = 0; l < 3; ++l) {
    if (l == k) continue;
    out.map.images[l] = first ? Poly::monomial(X, Monomial::variable(3, 1), FieldElement(alpha)) : Poly::variable(X, 2);
    first = false;
  }
  out.alpha = FieldElement(alpha);
  return out;
}

}  // namespace singkit
