#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <set>

#include "singkit/cases.hpp"
#include "singkit/catalog.hpp"
#include "singkit/io.hpp"
#include "singkit/isomorphy.hpp"
#include "singkit/local_algebra.hpp"
#include "singkit/modular_ideal.hpp"
#include "singkit/parser.hpp"
#include "singkit/standard_basis.hpp"

using namespace singkit;
using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 all verdicts hold, 1 a verdict failed, 2 usage or input error
constexpr int kFail = 1;
constexpr int kError = 2;

bool g_json = false;

// Distinct identifiers in order of appearance ("theta" excluded).
std::vector<std::string> infer_vars(const std::string& text) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string run = text.substr(i, j - i);
      i = j;
      if (run == "theta") continue;
      // a run like "xyz" or "s1s2" holds one name per letter (plus trailing digits)
      for (std::size_t a = 0; a < run.size();) {
        std::size_t b = a + 1;
        while (b < run.size() && std::isdigit(static_cast<unsigned char>(run[b]))) ++b;
        std::string id = run.substr(a, b - a);
        if (seen.insert(id).second) vars.push_back(id);
        a = b;
      }
    } else {
      ++i;
    }
  }
  return vars;
}

Poly germ_arg(const std::string& text, const std::string& vars, const std::string& minpoly) {
  std::vector<std::string> names;
  if (vars.empty()) {
    names = infer_vars(text);
  } else {
    std::stringstream ss(vars);
    std::string v;
    while (std::getline(ss, v, ',')) names.push_back(v);
  }
  return parse_polynomial(text, make_ring(names, TermOrder::local(), parse_field(minpoly)));
}

void emit(const json& j, const std::vector<std::pair<std::string, std::string>>& lines) {
  if (g_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : lines) std::cout << k << ": " << v << "\n";
}

std::string joined(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> monomials(const std::vector<Monomial>& ms, const RingPtr& R) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(monomial_string(m, R->vars));
  return out;
}

std::vector<std::string> polys(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

json report_json_value(const VerificationReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["contained"] = rep.contained;
  j["linear_rank"] = rep.linear_rank;
  j["required_rank"] = rep.required_rank;
  j["dim_source"] = dimension_string(rep.dim_source);
  j["dim_target"] = dimension_string(rep.dim_target);
  j["containment"] = polys(rep.containment);
  if (!rep.reverse.empty()) j["reverse"] = polys(rep.reverse);
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  return j;
}

void print_verification(const VerificationReport& rep) {
  if (g_json) {
    std::cout << report_json_value(rep).dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
  std::cout << "contained: " << (rep.contained ? "yes" : "no") << "\n";
  std::cout << "linear_rank: " << rep.linear_rank << "/" << rep.required_rank << "\n";
  std::cout << "dim_source: " << dimension_string(rep.dim_source) << "\n";
  std::cout << "dim_target: " << dimension_string(rep.dim_target) << "\n";
  for (std::size_t i = 0; i < rep.containment.size(); ++i)
    std::cout << "nf[" << i + 1 << "]: " << to_string(rep.containment[i]) << "\n";
  for (std::size_t i = 0; i < rep.reverse.size(); ++i)
    std::cout << "reverse_nf[" << i + 1 << "]: " << to_string(rep.reverse[i]) << "\n";
  if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
}

const Catalog& catalog_for(const std::string& path) {
  static std::optional<Catalog> loaded;
  if (path.empty()) return builtin_catalog();
  if (!loaded) loaded = load_catalog(path);
  return *loaded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singkit: isolated hypersurface singularities and their modular strata"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Machine-readable output");
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Catalog JSON instead of the built-in one");
  int status = 0;

  // invariants of a germ
  std::string germ, vars, minpoly;
  for (const char* name : {"milnor", "tjurina"}) {
    auto* c = app.add_subcommand(name, std::string(name) + " number of a germ");
    c->add_option("germ", germ, "Polynomial, e.g. x^4+y^5+x^2*y^3")->required();
    c->add_option("--vars", vars, "Comma-separated variables (default: identifiers in order)");
    c->add_option("--minpoly", minpoly, "Minimal polynomial of theta");
    const std::string which = name;
    c->callback([&, which] {
      Poly f = germ_arg(germ, vars, minpoly);
      auto v = which == "milnor" ? milnor_number(f) : tjurina_number(f);
      json j;
      j[which == "milnor" ? "mu" : "tau"] = dimension_string(v);
      emit(j, {{which == "milnor" ? "mu" : "tau", dimension_string(v)}});
    });
  }

  std::string ideal_file;
  auto* kb = app.add_subcommand("kbase", "Monomial basis of the quotient by an ideal");
  kb->add_option("ideal", ideal_file)->required()->check(CLI::ExistingFile);
  kb->callback([&] {
    LocalAlgebra A(load_ideal(ideal_file));
    auto m = monomials(A.kbase(), A.ring());
    json j;
    j["dimension"] = m.size();
    j["kbase"] = m;
    emit(j, {{"dimension", std::to_string(m.size())}, {"kbase", joined(m, ", ")}});
  });

  auto* sb = app.add_subcommand("stdbasis", "Standard basis (local) or Groebner basis (global)");
  sb->add_option("ideal", ideal_file)->required()->check(CLI::ExistingFile);
  sb->callback([&] {
    Ideal I = load_ideal(ideal_file);
    StandardBasis G = standard_basis(I);
    Ideal out(I.ring, G.elements());
    if (g_json) {
      json j;
      j["order"] = I.ring->order.name();
      j["basis"] = polys(G.elements());
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_ideal(out);
    }
  });

  std::string poly_text;
  auto* nf = app.add_subcommand("nf", "Normal form modulo an ideal");
  nf->add_option("poly", poly_text)->required();
  nf->add_option("--ideal", ideal_file)->required()->check(CLI::ExistingFile);
  nf->callback([&] {
    Ideal I = load_ideal(ideal_file);
    Poly g = parse_polynomial(poly_text, I.ring);
    std::string kind = "full";
    Poly r(I.ring);
    if (I.ring->order.is_local()) {
      LocalAlgebra A(I);
      if (A.is_artinian()) {
        r = A.reduced_normal_form(g);
        kind = "reduced";
      } else {
        r = mora_normal_form(g, A.standard_basis().elements());
        kind = "weak";
      }
    } else {
      r = full_normal_form(g, standard_basis(I).elements());
    }
    json j;
    j["nf"] = to_string(r);
    j["kind"] = kind;
    emit(j, {{"nf", to_string(r)}, {"kind", kind}});
  });

  auto* em = app.add_subcommand("embed", "Minimal embedding of an ideal");
  em->add_option("ideal", ideal_file)->required()->check(CLI::ExistingFile);
  em->callback([&] {
    Ideal I = load_ideal(ideal_file);
    Embedding e = minimal_embedding(I);
    if (g_json) {
      json j;
      j["vars"] = e.ideal.ring->vars;
      j["ideal"] = polys(e.ideal.gens);
      json images = json::object();
      for (std::size_t k = 0; k < I.ring->nvars(); ++k) images[I.ring->vars[k]] = to_string(e.images[k]);
      j["images"] = images;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_ideal(e.ideal);
      for (std::size_t k = 0; k < I.ring->nvars(); ++k)
        std::cout << "# " << I.ring->vars[k] << " = " << to_string(e.images[k]) << "\n";
    }
  });

  int p = 0, q = 0, r = 0;
  std::string lambda = "1";
  auto* ts = app.add_subcommand("tseries", "Invariants of x^p + y^q + z^r + lambda*xyz");
  ts->add_option("p", p)->required();
  ts->add_option("q", q)->required();
  ts->add_option("r", r)->required();
  ts->add_option("--lambda", lambda, "Coefficient of xyz");
  ts->add_option("--minpoly", minpoly, "Minimal polynomial of theta");
  ts->callback([&] {
    Field F = parse_field(minpoly);
    Poly f = t_series(p, q, r, parse_field_element(lambda, F));
    auto mu = milnor_number(f), tau = tjurina_number(f);
    std::string cls = t_series_class(p, q, r) == TClass::Parabolic ? "parabolic" : "hyperbolic";
    json j;
    j["germ"] = to_string(f);
    j["class"] = cls;
    j["mu"] = dimension_string(mu);
    j["tau"] = dimension_string(tau);
    emit(j, {{"germ", to_string(f)}, {"class", cls}, {"mu", dimension_string(mu)}, {"tau", dimension_string(tau)}});
  });

  bool reduced = false;
  auto* mi = app.add_subcommand("modular-ideal", "The modular-stratum ideal I(p,q,r)");
  mi->add_option("p", p)->required();
  mi->add_option("q", q)->required();
  mi->add_option("r", r)->required();
  mi->add_flag("--reduced", reduced, "Only the three mixed generators in t1, u1, v1");
  mi->callback([&] {
    Ideal I = reduced ? reduced_modular_ideal(p, q, r) : modular_ideal(p, q, r).ideal;
    if (g_json) {
      json j;
      j["vars"] = I.ring->vars;
      j["generators"] = polys(I.gens);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_ideal(I);
    }
  });

  auto* cat = app.add_subcommand("catalog", "Normal-form catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "Entry names");
  cat_list->callback([&] {
    json j = json::array();
    for (const auto& e : catalog_for(catalog_path).entries) {
      j.push_back(e.name);
      if (!g_json) std::cout << e.name << "\n";
    }
    if (g_json) std::cout << j.dump(2) << "\n";
  });
  std::string entry;
  auto* cat_show = cat->add_subcommand("show", "One entry with its validation");
  cat_show->add_option("name", entry)->required();
  cat_show->callback([&] {
    const CatalogEntry& e = catalog_for(catalog_path).find(entry);
    RowValidation v = validate_entry(e);
    json j;
    j["name"] = e.name;
    j["equation"] = e.equation;
    j["status"] = row_status_name(v.status);
    j["tjurina_basis"] = e.tjurina_basis;
    j["modular_equations"] = e.modular_equations;
    j["coordinates"] = v.coordinates;
    j["problems"] = v.problems;
    j["warnings"] = v.warnings;
    if (v.used_form) j["form"] = to_string(v.form());
    if (v.stratum) j["stratum"] = polys(v.stratum->gens);
    if (g_json) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "name: " << e.name << "\nequation: " << e.equation << "\nstatus: " << row_status_name(v.status) << "\n";
    std::cout << "tjurina_basis: " << joined(e.tjurina_basis, ", ") << "\n";
    for (const auto& m : e.modular_equations) std::cout << "equation: " << m << "\n";
    if (v.used_form) std::cout << "form: " << to_string(v.form()) << "\n";
    std::cout << "coordinates: " << joined(v.coordinates, ",") << "\n";
    if (v.stratum)
      for (const auto& g : v.stratum->gens) std::cout << "stratum: " << to_string(g) << "\n";
    for (const auto& s : v.problems) std::cout << "problem: " << s << "\n";
    for (const auto& s : v.warnings) std::cout << "warning: " << s << "\n";
  });
  auto* cat_val = cat->add_subcommand("validate", "Validate every row");
  cat_val->callback([&] {
    CaseReport rep = run_case("catalog", catalog_for(catalog_path));
    std::cout << (g_json ? report_json(rep) : format_report(rep));
    // unverified rows are reported, not an error
    status = 0;
  });

  std::string source_file, target_file, shape_file, map_file;
  bool surjection = false, ambient = false;
  auto* fi = app.add_subcommand("find-iso", "Search an isomorphism (or surjection) of local algebras");
  fi->add_option("--source", source_file)->required()->check(CLI::ExistingFile);
  fi->add_option("--target", target_file)->required()->check(CLI::ExistingFile);
  fi->add_option("--shape", shape_file, "Per-variable target monomials")->check(CLI::ExistingFile);
  fi->add_flag("--surjection", surjection, "Accept a surjection");
  fi->callback([&] {
    FindOptions o;
    o.require_isomorphism = !surjection;
    if (!shape_file.empty()) o.shape = load_shape(shape_file);
    Ideal A = load_ideal(source_file), B = load_ideal(target_file);
    SurjectionResult res = find_surjection(A, B, o);
    if (!res.map) {
      json j;
      j["result"] = "none";
      j["reason"] = res.reason;
      emit(j, {{"result", "none"}, {"reason", res.reason}});
      status = kFail;
      return;
    }
    if (g_json) {
      json j;
      j["result"] = verdict_name(res.report->verdict);
      j["parameters"] = res.parameters;
      j["map"] = format_map(*res.map);
      j["report"] = report_json_value(*res.report);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# " << verdict_name(res.report->verdict) << ", " << res.parameters << " parameters\n";
      std::cout << format_map(*res.map);
    }
  });

  auto* vi = app.add_subcommand("verify-iso", "Verify a map between local algebras");
  vi->add_option("--map", map_file)->required()->check(CLI::ExistingFile);
  vi->add_option("--source", source_file)->required()->check(CLI::ExistingFile);
  vi->add_option("--target", target_file)->required()->check(CLI::ExistingFile);
  vi->add_flag("--ambient", ambient, "Two-sided ideal equality under a coordinate change");
  vi->callback([&] {
    Ideal A = load_ideal(source_file), B = load_ideal(target_file);
    AlgebraMap m = align_map(load_map(map_file), A.ring);
    VerificationReport rep = ambient ? check_ambient_isomorphism(m, A, B) : verify(m, A, B);
    print_verification(rep);
    if (rep.verdict == Verdict::Failure || (ambient && rep.verdict != Verdict::Isomorphism)) status = kFail;
  });

  std::vector<std::string> cases;
  bool timings = false, list_cases = false;
  auto* vp = app.add_subcommand("verify-paper", "Run registered cases");
  vp->add_option("cases", cases, "tseries:p,q,r subseries:k,q,r symmetric:p,q,r w12 z11 s11 bimodal catalog all");
  vp->add_flag("--timings", timings, "Include timings (reports are no longer byte-stable)");
  vp->add_flag("--list", list_cases, "List the cases run by 'all'");
  vp->callback([&] {
    if (list_cases) {
      for (const auto& c : registered_cases()) std::cout << c << "\n";
      return;
    }
    if (cases.empty()) cases.push_back("all");
    for (const auto& c : cases) {
      CaseReport rep = run_case(c, catalog_for(catalog_path));
      std::cout << (g_json ? report_json(rep, timings) : format_report(rep, timings));
      if (!rep.passed()) status = kFail;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return status;
}
