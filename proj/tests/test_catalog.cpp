#include "doctest.h"
#include "singkit/catalog.hpp"
#include "singkit/parser.hpp"

#include <functional>

using namespace singkit;

namespace {

Poly P(const char* s, const RingPtr& r) { return parse_polynomial(s, r); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Io;
}

}  // namespace

TEST_CASE("t-series constructor") {
  RingPtr r = xyz_ring();
  Poly f = t_series(3, 3, 3, FieldElement(1));
  CHECK(f == P("x^3+y^3+z^3+xyz", r));
  CHECK(t_series_class(3, 3, 3) == TClass::Parabolic);
  CHECK(t_series_class(5, 4, 3) == TClass::Hyperbolic);
  CHECK(milnor_number(f) == 8u);
  CHECK(tjurina_number(f) == 8u);
  CHECK(code_of([] { t_series(2, 2, 2, FieldElement(1)); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { t_series(3, 3, 2, FieldElement(5)); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { t_series(3, 3, 3, FieldElement(-3)); }) == Errc::DegenerateLambda);
  // the argument order does not matter
  CHECK(t_series(3, 5, 4, FieldElement(1)) == P("x^3+y^5+z^4+xyz", r));
}

TEST_CASE("parabolic gaps") {
  auto g = parabolic_gap(3, 3, 3);
  REQUIRE(g);
  CHECK(g->power == 3);
  CHECK(g->value == Rational(-27));
  g = parabolic_gap(4, 4, 2);
  REQUIRE(g);
  CHECK(g->power == 4);
  CHECK(g->value == Rational(64));
  g = parabolic_gap(6, 3, 2);
  REQUIRE(g);
  CHECK(g->power == 6);
  CHECK(g->value == Rational(432));
  CHECK(!parabolic_gap(5, 4, 3));
  Field sqrt8 = Field::extension(UPoly({Rational(-8), Rational(0), Rational(1)}));
  FieldElement th = FieldElement::theta(sqrt8);
  CHECK(code_of([&] { t_series(4, 4, 2, th); }) == Errc::DegenerateLambda);
  CHECK(code_of([&] { t_series(4, 4, 2, -th); }) == Errc::DegenerateLambda);
  CHECK(tjurina_number(t_series(4, 4, 2, th + FieldElement(1))) == 9u);
  CHECK(tjurina_number(t_series(4, 4, 2, FieldElement(1))) == 9u);
  CHECK(tjurina_number(t_series(6, 3, 2, FieldElement(1))) == 10u);
}

TEST_CASE("limit singularity") {
  RingPtr r = xyz_ring();
  Poly f = limit_singularity(3, 3);
  CHECK(f == P("y^3+z^3+xyz", r));
  CHECK(!milnor_number(f).has_value());
  CHECK(limit_singularity(4, 2) == P("y^4+z^2+xyz", r));
  // every partial vanishes on the x-axis
  for (const Poly& g : jacobian_ideal(f).gens)
    for (const auto& t : g.terms()) CHECK(t.mono[1] + t.mono[2] > 0);
}

TEST_CASE("hesse form") {
  RingPtr r = xyz_ring();
  CHECK(hesse_form(P("x^3+y^7+z^2", r)) == P("504*x*y^5", r));
  RingPtr r1 = make_ring({"x"}, TermOrder::local());
  CHECK(hesse_form(P("x^2", r1)) == P("2", r1));
  Poly fam = hesse_family(P("x^3+y^7+z^2", r), FieldElement(Rational(1, 504)));
  CHECK(fam == P("x^3+y^7+z^2+x*y^5", r));
}

TEST_CASE("quasihomogeneity") {
  RingPtr r = xyz_ring();
  CHECK(is_quasihomogeneous(P("x^3+y^3+z^3+xyz", r)));
  CHECK(!is_quasihomogeneous(P("x^5+y^4+z^3+xyz", r)));
  RingPtr r1 = make_ring({"x"}, TermOrder::local());
  CHECK(is_quasihomogeneous(P("x^2", r1)));
  CHECK(code_of([&] { is_quasihomogeneous(P("y^3+z^3+xyz", r)); }) == Errc::NotArtinian);
}

TEST_CASE("miniversal deformation") {
  RingPtr r2 = make_ring({"x", "y"}, TermOrder::local());
  Deformation d = miniversal_deformation(P("x^2+y^2", r2));
  REQUIRE(d.basis.size() == 1);
  CHECK(d.basis[0].is_one());
  CHECK(d.F == parse_polynomial("x^2+y^2+s1", d.ring));

  RingPtr r = xyz_ring();
  Poly f = P("x^4+y^3+z^3+xyz", r);
  std::vector<Monomial> b;
  for (const char* s : {"x^3", "x^2", "x", "1", "y^2", "y", "z^2", "z"}) b.push_back(P(s, r).lead_monomial());
  d = miniversal_deformation(f, b);
  CHECK(d.F == parse_polynomial("x^4+y^3+z^3+xyz+s1*x^3+s2*x^2+s3*x+s4+s5*y^2+s6*y+s7*z^2+s8*z", d.ring));

  auto short_basis = b;
  short_basis.pop_back();
  CHECK(code_of([&] { miniversal_deformation(f, short_basis); }) == Errc::BasisWrongSize);
  auto dependent = b;
  dependent[7] = P("y*z", r).lead_monomial();  // yz = -4x^3 mod J
  CHECK(code_of([&] { miniversal_deformation(f, dependent); }) == Errc::BasisNotIndependent);
}

TEST_CASE("splitting families") {
  CHECK(code_of([] { splitting_family(5, 4, 5, 4); }) == Errc::NotASubseries);
  CHECK(code_of([] { splitting_family(3, 4, 3, 3); }) == Errc::NotASubseries);
  REQUIRE(find_subseries(3, 3));
  CHECK(find_subseries(3, 3)->l == 4);
  CHECK(subseries_list().size() == 6u);

  CHECK(splitting_fiber(5, 4, 3, 3, FieldElement()) == t_series(5, 3, 3, FieldElement(1)));
  CHECK(splitting_fiber(7, 5, 4, 2, FieldElement()) == t_series(7, 4, 2, FieldElement(1)));

  Poly f = splitting_fiber(5, 4, 3, 3, FieldElement(1));
  CHECK(local_invariants_at(f, {FieldElement(), FieldElement(), FieldElement()}).tau == 8u);
  CHECK(global_tjurina_number(f) == 9u);

  Poly g = splitting_fiber(4, 4, 3, 3, FieldElement(1));
  CHECK(tjurina_number(g) == 8u);
  CHECK(global_tjurina_number(g) == 8u);
}

TEST_CASE("catalog validation") {
  const Catalog& c = builtin_catalog();
  CHECK(c.entries.size() == 15u);
  CHECK(code_of([&] { c.find("X9"); }) == Errc::UnknownCase);

  RowValidation w = validate_entry(c.find("W12"));
  CHECK(w.status == RowStatus::Verified);
  REQUIRE(w.stratum);
  CHECK(w.coordinates == std::vector<std::string>{"s1", "s2"});
  const FormCheck& fc = w.forms.at(*w.used_form);
  CHECK(fc.mu == 12u);
  CHECK(fc.tau == 11u);
  CHECK(fc.ok());
  CHECK(LocalAlgebra(*w.stratum).dimension() == 12u);

  CHECK(validate_entry(c.find("E13")).status == RowStatus::Reconstructed);
  for (const char* name : {"E14", "Q12", "S12"}) CHECK(!validate_entry(c.find(name)).passed());

  // strata whose equations vanish on a coordinate axis
  RowValidation s = validate_entry(c.find("S11"));
  REQUIRE(s.stratum);
  CHECK(!LocalAlgebra(*s.stratum).is_artinian());
}

TEST_CASE("hesse type of exceptional forms") {
  for (const CatalogEntry& e : builtin_catalog().entries) {
    if (e.kind != "exceptional") continue;
    RowValidation v = validate_entry(e);
    if (!v.used_form) continue;
    CAPTURE(e.name);
    CHECK(v.forms[*v.used_form].hesse_ok);
    CHECK(is_quasihomogeneous(v.form()) == (v.forms[*v.used_form].mu == v.forms[*v.used_form].tau));
  }
}

TEST_CASE("deformation rows") {
  ParsedDeformation d = parse_deformation_row("f + s1 y^4 + s2 x y^2 + s3");
  REQUIRE(d.monomials.size() == 3u);
  CHECK(d.monomials[1] == "y^4");
  CHECK(d.monomials[3] == "1");
  CHECK(!d.glued);
}

TEST_CASE("catalog json errors") {
  CHECK(code_of([] { parse_catalog("{\"entries\": [{\"name\": 3}]}"); }) == Errc::Io);
  CHECK(code_of([] { parse_catalog("not json"); }) == Errc::Io);
}
