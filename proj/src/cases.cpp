#include "singkit/cases.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "singkit/io.hpp"
#include "singkit/modular_ideal.hpp"
#include "singkit/parser.hpp"

namespace singkit {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  Timer() : start_(Clock::now()) {}
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
};

std::string dim(const std::optional<std::size_t>& d) { return dimension_string(d); }

void put(CaseReport& r, const std::string& k, const std::string& v) { r.invariants.emplace_back(k, v); }
void put(CaseReport& r, const std::string& k, std::size_t v) { r.invariants.emplace_back(k, std::to_string(v)); }
void check(CaseReport& r, const std::string& k, bool ok) { r.verdicts.emplace_back(k, ok); }

std::vector<int> triple(const std::string& args, const std::string& name) {
  std::vector<int> v;
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::exception&) {
      throw Error(Errc::UnknownCase, name);
    }
  }
  if (v.size() != 3) throw Error(Errc::UnknownCase, name);
  return v;
}

// Reduced I(p,q,r) against the jacobian ideal of the diagonal (or symmetric) target.
void modular_part(CaseReport& r, int p, int q, int rr) {
  Timer t;
  Ideal I = reduced_modular_ideal(p, q, rr);
  LocalAlgebra A(I);
  put(r, "reduced_dim", dim(A.dimension()));
  SubseriesProfile prof = subseries_profile(p, q, rr);
  std::string vanishing;
  for (const auto& v : prof.vanishing()) vanishing += (vanishing.empty() ? "" : ",") + v;
  put(r, "vanishing", vanishing.empty() ? "none" : vanishing);
  put(r, "line_components", static_cast<std::size_t>(prof.line_components));
  DiagonalSolution d = prof.line_components >= 2 ? symmetric_exception_map(p, q, rr) : solve_diagonal(p, q, rr);
  put(r, "target", to_string(d.target));
  put(r, "field", d.field.to_string());
  VerificationReport rep = check_ambient_isomorphism(d.map, I, jacobian_ideal(d.target));
  put(r, "map", format_map(d.map));
  check(r, "ambient_isomorphism", rep.verdict == Verdict::Isomorphism);
  r.timings.emplace_back("modular", t.ms());
}

CaseReport tseries_case(const std::string& name, int p, int q, int rr, const std::string& mode) {
  CaseReport r;
  r.name = name;
  r.inputs.emplace_back("indices", std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(rr));
  Timer t;
  Poly f = t_series(p, q, rr, FieldElement(1));
  r.inputs.emplace_back("germ", to_string(f));
  auto mu = milnor_number(f), tau = tjurina_number(f);
  put(r, "mu", dim(mu));
  put(r, "tau", dim(tau));
  r.timings.emplace_back("invariants", t.ms());
  const std::size_t s = static_cast<std::size_t>(p + q + rr);
  TClass cls = t_series_class(p, q, rr);
  put(r, "class", cls == TClass::Parabolic ? "parabolic" : "hyperbolic");
  if (cls == TClass::Parabolic) {
    check(r, "mu_equals_tau", mu && tau && *mu == *tau);
    return r;
  }
  check(r, "mu", mu && *mu == s - 1);
  check(r, "tau", tau && *tau == s - 2);
  SubseriesProfile prof = subseries_profile(p, q, rr);
  if (mode == "subseries") check(r, "in_subseries", in_subseries(p, q, rr) && prof.line_components == 1);
  if (mode == "symmetric") check(r, "symmetric_exception", prof.line_components >= 2);
  modular_part(r, p, q, rr);
  if (prof.line_components == 0) {
    LocalAlgebra A(reduced_modular_ideal(p, q, rr));
    check(r, "reduced_dim_is_mu", A.dimension() && mu && *A.dimension() == *mu);
  } else {
    check(r, "reduced_not_artinian", !LocalAlgebra(reduced_modular_ideal(p, q, rr)).is_artinian());
  }
  return r;
}

struct Row {
  RowValidation v;
  Ideal milnor;
};

Row row(const Catalog& c, const std::string& name) {
  Row out{validate_entry(c.find(name)), {}};
  if (out.v.used_form) out.milnor = jacobian_ideal(out.v.form());
  return out;
}

void row_inputs(CaseReport& r, const Row& w) {
  r.inputs.emplace_back("status", std::string(row_status_name(w.v.status)));
  if (w.v.used_form) {
    r.inputs.emplace_back("form", w.v.forms[*w.v.used_form].label);
    r.inputs.emplace_back("germ", to_string(w.v.form()));
  }
  std::string coords;
  for (const auto& s : w.v.coordinates) coords += (coords.empty() ? "" : ",") + s;
  r.inputs.emplace_back("coordinates", coords);
}

void search_part(CaseReport& r, const CatalogEntry& e, const Row& w) {
  Timer t;
  FindOptions o;
  o.shape = e.iso_shape;
  try {
    SurjectionResult s = find_surjection(*w.v.stratum, w.milnor, o);
    put(r, "search_parameters", s.parameters);
    if (s.map) {
      put(r, "search_field", s.map->target->field.to_string());
      put(r, "search_map", format_map(*s.map));
      check(r, "search_isomorphism", s.report->verdict == Verdict::Isomorphism);
    } else {
      put(r, "search_result", s.reason);
      check(r, "search_isomorphism", false);
      if (s.reason.rfind("dimension-mismatch", 0) == 0) {
        o.require_isomorphism = false;
        SurjectionResult sj = find_surjection(*w.v.stratum, w.milnor, o);
        put(r, "surjection_search", sj.map ? std::string(verdict_name(sj.report->verdict)) : sj.reason);
      }
    }
  } catch (const Error& ex) {
    put(r, "search_result", ex.what());
    check(r, "search_isomorphism", false);
  }
  r.timings.emplace_back("search", t.ms());
}

void paper_map_part(CaseReport& r, const CatalogEntry& e, const Row& w, std::size_t degree) {
  Timer t;
  AlgebraMap m = catalog_paper_map(e, w.v.stratum->ring, w.milnor.ring);
  put(r, "paper_field", m.target->field.to_string());
  VerificationReport rep = verify(m, *w.v.stratum, w.milnor);
  put(r, "paper_map_verdict", std::string(verdict_name(rep.verdict)));
  if (!rep.witness.empty()) put(r, "paper_map_witness", rep.witness);
  check(r, "paper_map_isomorphism", rep.verdict == Verdict::Isomorphism);
  if (degree) check(r, "paper_field_degree", m.target->field.degree() == degree);
  r.timings.emplace_back("paper_map", t.ms());
}

CaseReport stratum_case(const Catalog& c, const std::string& name, const std::string& entry, bool paper,
                        bool search, std::size_t degree) {
  CaseReport r;
  r.name = name;
  Timer t;
  Row w = row(c, entry);
  row_inputs(r, w);
  check(r, "row_validated", w.v.passed());
  if (!w.v.passed() || !w.v.stratum) return r;
  auto mu = LocalAlgebra(w.milnor).dimension();
  auto ds = LocalAlgebra(*w.v.stratum).dimension();
  put(r, "mu", dim(mu));
  put(r, "stratum_dim", dim(ds));
  Prechecks pc = isomorphy_prechecks(*w.v.stratum, w.milnor);
  check(r, "prechecks", pc.ok());
  r.timings.emplace_back("validation", t.ms());
  const CatalogEntry& e = c.find(entry);
  if (paper && e.paper_map) paper_map_part(r, e, w, degree);
  if (search) search_part(r, e, w);
  return r;
}

CaseReport catalog_case(const Catalog& c) {
  CaseReport r;
  r.name = "catalog";
  std::size_t passed = 0;
  for (const auto& e : c.entries) {
    CaseReport row;
    row.name = e.name;
    Timer t;
    RowValidation v = validate_entry(e);
    row.inputs.emplace_back("status", std::string(row_status_name(v.status)));
    for (const auto& f : v.forms)
      row.invariants.emplace_back(f.label, "mu=" + dim(f.mu) + " tau=" + dim(f.tau) + " basis=" +
                                               (f.basis_ok ? "ok" : "bad") + " hesse=" + (f.hesse_ok ? "ok" : "bad"));
    for (const auto& p : v.problems) row.invariants.emplace_back("problem", p);
    for (const auto& p : v.warnings) row.invariants.emplace_back("warning", p);
    if (v.passed()) {
      ++passed;
      Prechecks pc = isomorphy_prechecks(*v.stratum, jacobian_ideal(v.form()));
      row.invariants.emplace_back("stratum_dim", dim(pc.dim_stratum));
      check(row, "prechecks", pc.ok());
    }
    row.timings.emplace_back("validate", t.ms());
    r.children.push_back(std::move(row));
  }
  put(r, "validated_rows", passed);
  put(r, "rows", c.entries.size());
  return r;
}

}  // namespace

bool CaseReport::passed() const {
  for (const auto& [k, ok] : verdicts)
    if (!ok) return false;
  for (const auto& c : children)
    if (!c.passed()) return false;
  return true;
}

std::vector<std::string> registered_cases() {
  return {"tseries:5,4,3", "tseries:5,5,5", "tseries:7,5,3", "subseries:5,3,3", "subseries:7,3,2",
          "symmetric:4,4,4", "symmetric:6,3,3", "symmetric:6,4,2", "symmetric:6,6,2", "symmetric:6,6,3",
          "w12", "z11", "s11", "bimodal", "catalog"};
}

AlgebraMap catalog_paper_map(const CatalogEntry& e, const RingPtr& stratum, const RingPtr& form_ring) {
  if (!e.paper_map) throw Error(Errc::InvalidArgument, e.name + " has no transcribed map");
  Field F = parse_field(e.paper_map->minpoly);
  RingPtr target = ring_with_field(form_ring, F);
  AlgebraMap m{stratum, target, std::vector<Poly>(stratum->nvars(), Poly(target))};
  std::vector<bool> seen(stratum->nvars(), false);
  for (const auto& [var, expr] : e.paper_map->images) {
    auto k = stratum->index_of(var);
    if (!k) throw Error(Errc::InvalidArgument, "map names " + var + " outside the stratum coordinates");
    m.images[*k] = parse_polynomial(expr, target);
    seen[*k] = true;
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw Error(Errc::InvalidArgument, "map has no image for " + stratum->vars[k]);
  return m;
}

CaseReport run_case(const std::string& name, const Catalog& catalog) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  if (colon != std::string::npos) {
    auto t = triple(name.substr(colon + 1), name);
    if (head == "tseries" || head == "subseries" || head == "symmetric")
      return tseries_case(name, t[0], t[1], t[2], head);
    throw Error(Errc::UnknownCase, name);
  }
  if (name == "w12") return stratum_case(catalog, name, "W12", true, true, 2);
  if (name == "z11") return stratum_case(catalog, name, "Z11", false, true, 0);
  if (name == "s11") return stratum_case(catalog, name, "S11", false, true, 0);
  if (name == "bimodal") return stratum_case(catalog, name, "bimodal", true, false, 4);
  if (name == "catalog") return catalog_case(catalog);
  if (name == "all") {
    CaseReport r;
    r.name = "all";
    for (const auto& c : registered_cases()) r.children.push_back(run_case(c, catalog));
    return r;
  }
  throw Error(Errc::UnknownCase, name);
}

namespace {

void format_into(std::ostringstream& out, const CaseReport& r, bool timings, const std::string& indent) {
  out << indent << "case " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  auto block = [&](const std::string& k, const std::string& v) {
    if (v.find('\n') == std::string::npos) {
      out << indent << "  " << k << " = " << v << "\n";
      return;
    }
    out << indent << "  " << k << ":\n";
    std::istringstream lines(v);
    std::string l;
    while (std::getline(lines, l)) out << indent << "    " << l << "\n";
  };
  for (const auto& [k, v] : r.inputs) block(k, v);
  for (const auto& [k, v] : r.invariants) block(k, v);
  for (const auto& [k, ok] : r.verdicts) out << indent << "  [" << (ok ? "pass" : "FAIL") << "] " << k << "\n";
  if (timings)
    for (const auto& [k, ms] : r.timings) out << indent << "  time " << k << " = " << ms << " ms\n";
  for (const auto& c : r.children) format_into(out, c, timings, indent + "  ");
}

nlohmann::ordered_json to_json(const CaseReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["case"] = r.name;
  j["passed"] = r.passed();
  auto pairs = [](const auto& v) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (const auto& [k, x] : v) o[k] = x;
    return o;
  };
  j["inputs"] = pairs(r.inputs);
  // repeated keys (problem, warning) collect into arrays
  nlohmann::ordered_json inv = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.invariants) {
    if (!inv.contains(k)) inv[k] = v;
    else if (inv[k].is_array()) inv[k].push_back(v);
    else inv[k] = nlohmann::ordered_json::array({inv[k], v});
  }
  j["invariants"] = inv;
  j["verdicts"] = pairs(r.verdicts);
  if (timings) j["timings_ms"] = pairs(r.timings);
  if (!r.children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : r.children) j["children"].push_back(to_json(c, timings));
  }
  return j;
}

}  // namespace

std::string format_report(const CaseReport& r, bool timings) {
  std::ostringstream out;
  format_into(out, r, timings, "");
  return out.str();
}

std::string report_json(const CaseReport& r, bool timings) { return to_json(r, timings).dump(2) + "\n"; }

}  // namespace singkit
