#include "singkit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "singkit/catalog_data.hpp"
#include "singkit/parser.hpp"

namespace singkit {

namespace {

FieldElement pow_elem(FieldElement b, int e) {
  FieldElement r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Poly var_power(const RingPtr& R, std::size_t i, int e) {
  return Poly::monomial(R, Monomial::variable(R->nvars(), i, e), FieldElement(1));
}

Poly determinant(std::vector<std::vector<Poly>> m, const RingPtr& R) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(R, FieldElement(1));
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly det(R);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * determinant(std::move(minor), R);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

std::vector<std::string> split_summands(const std::string& text) {
  // top-level " + " only; catalog equations are sums of monomials
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && ch == '+') {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(cur);
  return out;
}

Monomial parse_monomial(const std::string& text, const RingPtr& ring) {
  Poly p = parse_polynomial(text, ring);
  if (p.size() != 1 || !p.lead_coeff().is_one()) {
    throw Error(Errc::InvalidArgument, "not a monomial: " + text);
  }
  return p.lead_monomial();
}

bool proportional(const Vector& a, const Vector& b) {
  // a = c*b with c != 0, b != 0
  std::optional<FieldElement> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].is_zero()) {
      if (!a[i].is_zero()) return false;
      continue;
    }
    FieldElement r = a[i] / b[i];
    if (c && *c != r) return false;
    c = r;
  }
  return c && !c->is_zero();
}

FormCheck check_form(const std::string& label, const Poly& f, const Poly& leading, const Poly& perturbation,
                     const std::vector<Monomial>& basis, bool need_hesse) {
  FormCheck fc;
  fc.label = label;
  fc.f = f;
  fc.leading = leading;
  fc.perturbation = perturbation;
  fc.mu = milnor_number(f);
  LocalAlgebra t(tjurina_ideal(f));
  fc.tau = t.dimension();
  if (!fc.tau) {
    fc.problems.push_back("not an isolated singularity");
    return fc;
  }
  if (*fc.tau != basis.size()) {
    fc.problems.push_back("tau = " + std::to_string(*fc.tau) + " but the basis lists " + std::to_string(basis.size()));
  } else {
    Matrix m;
    for (const auto& b : basis) m.push_back(t.coordinates(Poly::monomial(t.ring(), b, FieldElement(1))));
    if (rank(m) != basis.size()) fc.problems.push_back("basis is not independent in T(f)");
    else fc.basis_ok = true;
  }
  fc.mu_ok = fc.mu && *fc.mu == *fc.tau + 1;
  if (!fc.mu_ok) fc.problems.push_back("mu = " + dimension_string(fc.mu) + " is not tau + 1");
  if (!need_hesse) {
    fc.hesse_ok = true;
    return fc;
  }
  LocalAlgebra q0(jacobian_ideal(leading));
  if (!q0.is_artinian()) {
    fc.problems.push_back("leading form is not isolated");
    return fc;
  }
  Vector h = q0.coordinates(hesse_form(leading).in_ring(q0.ring()));
  Vector p = q0.coordinates(perturbation.in_ring(q0.ring()));
  fc.hesse_ok = proportional(h, p);
  if (!fc.hesse_ok) fc.problems.push_back("Hessian of the leading form is not a multiple of the perturbation in Q(f0)");
  return fc;
}

}  // namespace

int t_series_sign(int p, int q, int r) {
  long long lhs = static_cast<long long>(q) * r + static_cast<long long>(p) * r + static_cast<long long>(p) * q;
  long long rhs = static_cast<long long>(p) * q * r;
  return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

TClass t_series_class(int p, int q, int r) {
  int s = t_series_sign(p, q, r);
  if (s > 0 || p < 2 || q < 2 || r < 2) throw Error(Errc::IndexOutOfRange, "1/p + 1/q + 1/r > 1");
  return s == 0 ? TClass::Parabolic : TClass::Hyperbolic;
}

std::optional<LambdaGap> parabolic_gap(int p, int q, int r) {
  std::vector<int> s{p, q, r};
  std::sort(s.rbegin(), s.rend());
  if (s == std::vector<int>{3, 3, 3}) return LambdaGap{3, Rational(-27)};
  if (s == std::vector<int>{4, 4, 2}) return LambdaGap{4, Rational(64)};
  if (s == std::vector<int>{6, 3, 2}) return LambdaGap{6, Rational(432)};
  return std::nullopt;
}

RingPtr xyz_ring(const Field& field) { return make_ring({"x", "y", "z"}, TermOrder::local(), field); }

Poly t_series(int p, int q, int r, const FieldElement& lambda) {
  if (t_series_class(p, q, r) == TClass::Parabolic) {
    auto gap = parabolic_gap(p, q, r);
    if (gap && pow_elem(lambda, gap->power) == FieldElement(gap->value)) {
      throw Error(Errc::DegenerateLambda, "lambda^" + std::to_string(gap->power) + " = " + to_string(gap->value));
    }
  }
  RingPtr R = xyz_ring(lambda.field());
  Poly f = var_power(R, 0, p) + var_power(R, 1, q) + var_power(R, 2, r);
  f += Poly::monomial(R, Monomial{1, 1, 1}, lambda);
  return f;
}

Poly limit_singularity(int q, int r) {
  if (q < 2 || r < 2) throw Error(Errc::IndexOutOfRange, "q, r must be at least 2");
  RingPtr R = xyz_ring();
  return var_power(R, 1, q) + var_power(R, 2, r) + Poly::monomial(R, Monomial{1, 1, 1}, FieldElement(1));
}

Poly hesse_form(const Poly& f0) {
  const RingPtr& R = f0.ring();
  const std::size_t n = R->nvars();
  std::vector<Poly> d1;
  for (std::size_t i = 0; i < n; ++i) d1.push_back(derivative(f0, i));
  std::vector<std::vector<Poly>> h(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = derivative(d1[i], j);
  return determinant(std::move(h), R);
}

Poly hesse_family(const Poly& f0, const FieldElement& lambda) { return f0 + hesse_form(f0) * lambda; }

Deformation miniversal_deformation(const Poly& f, const std::optional<std::vector<Monomial>>& basis) {
  LocalAlgebra t(tjurina_ideal(f));
  const auto& kb = t.kbase();
  Deformation d;
  d.f = f;
  if (basis) {
    if (basis->size() != kb.size()) {
      throw Error(Errc::BasisWrongSize,
                  "basis has " + std::to_string(basis->size()) + " elements, tau = " + std::to_string(kb.size()));
    }
    Matrix m;
    for (const auto& b : *basis) m.push_back(t.coordinates(Poly::monomial(t.ring(), b, FieldElement(1))));
    if (rank(m) != kb.size()) throw Error(Errc::BasisNotIndependent, "basis is dependent modulo the Tjurina ideal");
    d.basis = *basis;
  } else {
    d.basis = kb;
  }
  const RingPtr& R = f.ring();
  const std::size_t n = R->nvars();
  std::vector<std::string> vars = R->vars;
  for (std::size_t i = 1; i <= d.basis.size(); ++i) vars.push_back("s" + std::to_string(i));
  d.ring = make_ring(vars, R->order, R->field);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  d.F = remap_variables(f, d.ring, idx);
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    Monomial m(vars.size());
    for (std::size_t k = 0; k < n; ++k) m.set(k, d.basis[i][k]);
    m.set(n + i, 1);
    d.F += Poly::monomial(d.ring, m, FieldElement(1));
  }
  return d;
}

const std::vector<Subseries>& subseries_list() {
  static const std::vector<Subseries> list{{3, 3, 4}, {4, 2, 5}, {4, 4, 3}, {3, 2, 7}, {6, 2, 4}, {6, 3, 3}};
  return list;
}

std::optional<Subseries> find_subseries(int q, int r) {
  for (const auto& s : subseries_list())
    if (s.q == q && s.r == r) return s;
  return std::nullopt;
}

Poly splitting_family(int k, int l, int q, int r) {
  auto s = find_subseries(q, r);
  if (!s || s->l != l || k < l) {
    throw Error(Errc::NotASubseries, "(" + std::to_string(k) + "," + std::to_string(q) + "," + std::to_string(r) +
                                         ") with l = " + std::to_string(l) + " is not a sub-series member");
  }
  RingPtr R = make_ring({"x", "y", "z", "t"}, TermOrder::local());
  Poly xt = Poly::variable(R, 0) + Poly::variable(R, 3);
  Poly f = var_power(R, 0, l - 1) * power(xt, k - l + 1);
  f += var_power(R, 1, q) + var_power(R, 2, r);
  f += Poly::monomial(R, Monomial{1, 1, 1, 0}, FieldElement(1));
  return f;
}

Poly splitting_fiber(int k, int l, int q, int r, const FieldElement& t) {
  Poly F = splitting_family(k, l, q, r);
  RingPtr R = xyz_ring(t.field());
  std::vector<Poly> images{Poly::variable(R, 0), Poly::variable(R, 1), Poly::variable(R, 2), Poly::constant(R, t)};
  return substitute(F, images, R);
}

// ---------------------------------------------------------------------------

const CatalogEntry& Catalog::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(Errc::UnknownCase, "no catalog entry " + name);
}

Catalog parse_catalog(const std::string& json_text) {
  using nlohmann::json;
  Catalog cat;
  try {
    json doc = json::parse(json_text);
    for (const auto& r : doc.at("entries")) {
      CatalogEntry e;
      e.name = r.at("name").get<std::string>();
      e.kind = r.value("kind", std::string("exceptional"));
      e.vars = r.at("vars").get<std::vector<std::string>>();
      e.equation = r.at("equation").get<std::string>();
      e.leading_form = r.value("leading_form", std::string());
      e.tjurina_basis = r.at("tjurina_basis").get<std::vector<std::string>>();
      e.bold = r.at("bold").get<std::vector<bool>>();
      e.modular_equations = r.at("modular_equations").get<std::vector<std::string>>();
      e.deformation = r.value("deformation", std::string());
      if (r.contains("iso_shape")) e.iso_shape = r.at("iso_shape").get<std::map<std::string, std::vector<std::string>>>();
      if (r.contains("paper_map")) {
        PaperMap pm;
        const auto& m = r.at("paper_map");
        pm.minpoly = m.value("minpoly", std::string());
        for (const auto& [k, v] : m.at("images").items()) pm.images.emplace_back(k, v.get<std::string>());
        e.paper_map = pm;
      }
      if (r.contains("notes")) e.notes = r.at("notes").get<std::vector<std::string>>();
      if (e.bold.size() != e.tjurina_basis.size()) {
        throw Error(Errc::Io, e.name + ": bold markers do not match the basis length");
      }
      cat.entries.push_back(std::move(e));
    }
  } catch (const json::exception& ex) {
    throw Error(Errc::Io, std::string("catalog: ") + ex.what());
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const Catalog& builtin_catalog() {
  static const Catalog cat = parse_catalog(kCatalogJson);
  return cat;
}

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Verified: return "verified";
    case RowStatus::Reconstructed: return "reconstructed";
    case RowStatus::Unverified: return "unverified";
  }
  return "?";
}

std::vector<Monomial> entry_basis(const CatalogEntry& e, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (const auto& b : e.tjurina_basis) out.push_back(parse_monomial(b, ring));
  return out;
}

ParsedDeformation parse_deformation_row(const std::string& text) {
  ParsedDeformation out;
  static const std::regex param(R"(s_?\{?(\d+)\}?)");
  auto begin = std::sregex_iterator(text.begin(), text.end(), param);
  std::vector<std::smatch> hits(begin, std::sregex_iterator());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::size_t from = static_cast<std::size_t>(hits[i].position(0) + hits[i].length(0));
    std::size_t to = i + 1 < hits.size() ? static_cast<std::size_t>(hits[i + 1].position(0)) : text.size();
    std::string mono = text.substr(from, to - from);
    auto plus = mono.find('+');
    if (plus != std::string::npos) mono = mono.substr(0, plus);
    else if (i + 1 < hits.size()) out.glued = true;
    mono.erase(std::remove_if(mono.begin(), mono.end(), ::isspace), mono.end());
    out.monomials[std::stoi(hits[i].str(1))] = mono.empty() ? "1" : mono;
  }
  return out;
}

RowValidation validate_entry(const CatalogEntry& e) {
  RowValidation v;
  v.name = e.name;
  RingPtr R = make_ring(e.vars, TermOrder::local());
  const bool need_hesse = e.kind == "exceptional";
  try {
    std::vector<Monomial> basis = entry_basis(e, R);
    Poly printed = parse_polynomial(e.equation, R);
    auto summands = split_summands(e.equation);
    Poly pert = parse_polynomial(summands.back(), R);
    Poly lead(R);
    for (std::size_t i = 0; i + 1 < summands.size(); ++i) lead += parse_polynomial(summands[i], R);
    v.forms.push_back(check_form("printed", printed, lead, pert, basis, need_hesse));
    if (v.forms[0].ok()) {
      v.used_form = 0;
    } else if (need_hesse) {
      Poly f0 = e.leading_form.empty() ? lead : parse_polynomial(e.leading_form, R);
      v.forms.push_back(check_form("reconstructed", f0 + hesse_form(f0), f0, pert, basis, true));
      if (v.forms[1].ok()) v.used_form = 1;
    }
    if (!v.used_form) v.problems.push_back("no normal form passes validation");
  } catch (const Error& ex) {
    v.problems.push_back(std::string("normal form: ") + ex.what());
  }

  // stratum coordinates are the parameters of the bold basis elements
  std::set<int> bold_idx, used_idx;
  for (std::size_t i = 0; i < e.bold.size(); ++i)
    if (e.bold[i]) bold_idx.insert(static_cast<int>(i) + 1);
  static const std::regex param(R"(s(\d+))");
  for (const auto& eq : e.modular_equations)
    for (auto it = std::sregex_iterator(eq.begin(), eq.end(), param); it != std::sregex_iterator(); ++it)
      used_idx.insert(std::stoi(it->str(1)));
  v.equations_ok = true;
  for (int i : used_idx) {
    if (!bold_idx.count(i)) {
      v.problems.push_back("s" + std::to_string(i) + " is not a bold (stratum) coordinate");
      v.equations_ok = false;
    }
  }
  if (e.modular_equations.size() < bold_idx.size()) {
    v.problems.push_back("fewer equations than stratum coordinates");
    v.equations_ok = false;
  }
  for (int i : bold_idx) v.coordinates.push_back("s" + std::to_string(i));
  if (v.equations_ok) {
    try {
      RingPtr S = make_ring(v.coordinates, TermOrder::local());
      std::vector<Poly> gens;
      for (const auto& eq : e.modular_equations) {
        std::vector<Monomial> monos;
        for (const auto& part : split_summands(eq)) {
          Poly p = parse_polynomial(part, S);
          for (const auto& t : p.terms()) monos.push_back(t.mono);
        }
        for (std::size_t a = 0; a < monos.size(); ++a)
          for (std::size_t b = a + 1; b < monos.size(); ++b)
            if (monos[a] == monos[b]) v.warnings.push_back("repeated monomial in: " + eq);
        gens.push_back(parse_polynomial(eq, S));
      }
      v.stratum = Ideal(S, gens);
    } catch (const Error& ex) {
      v.problems.push_back(std::string("equations: ") + ex.what());
      v.equations_ok = false;
    }
  }

  if (!e.deformation.empty()) {
    ParsedDeformation d = parse_deformation_row(e.deformation);
    if (d.glued) {
      v.warnings.push_back("deformation row glues two parameters into one summand; split for reading");
      v.manual_confirmation = true;
    }
    for (const auto& [i, text] : d.monomials) {
      bool match = false;
      try {
        match = i >= 1 && static_cast<std::size_t>(i) <= e.tjurina_basis.size() &&
                parse_monomial(text, R) == parse_monomial(e.tjurina_basis[static_cast<std::size_t>(i - 1)], R);
      } catch (const Error&) {
      }
      if (!match) v.warnings.push_back("deformation parameter s" + std::to_string(i) + " does not match the basis");
    }
  }

  if (v.used_form && v.equations_ok) {
    v.status = *v.used_form == 0 ? RowStatus::Verified : RowStatus::Reconstructed;
  }
  return v;
}

Prechecks isomorphy_prechecks(const Ideal& stratum, const Ideal& milnor) {
  Prechecks p;
  LocalAlgebra a(stratum), b(milnor);
  p.dim_stratum = a.dimension();
  p.mu = b.dimension();
  p.dimension_ok = p.dim_stratum && p.mu && *p.dim_stratum == *p.mu;
  p.embdim_stratum = a.embdim();
  p.embdim_milnor = b.embdim();
  p.embdim_ok = p.embdim_stratum == p.embdim_milnor;
  int top = 0;
  if (a.is_artinian()) top = std::max(top, a.nilpotency_bound());
  if (b.is_artinian()) top = std::max(top, b.nilpotency_bound());
  if (!a.is_artinian() || !b.is_artinian()) top = std::max(top, 12);
  for (int k = 0; k <= top; ++k) {
    p.hilbert_stratum.push_back(a.hilbert_function(k));
    p.hilbert_milnor.push_back(b.hilbert_function(k));
  }
  p.hilbert_ok = p.hilbert_stratum == p.hilbert_milnor;
  return p;
}

}  // namespace singkit
