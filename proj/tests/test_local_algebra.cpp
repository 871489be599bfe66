#include "doctest.h"
#include "singkit/local_algebra.hpp"
#include "singkit/parser.hpp"

using namespace singkit;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}, TermOrder::local()); }
Poly P(const char* s, const RingPtr& r) { return parse_polynomial(s, r); }
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(P(s, r));
  return Ideal(r, g);
}

}  // namespace

TEST_CASE("kbase") {
  RingPtr r = xyz();
  CHECK(LocalAlgebra(I(r, {"x", "y", "z"})).kbase().size() == 1);
  CHECK(LocalAlgebra(jacobian_ideal(P("x^3+y^3+z^3+xyz", r))).kbase().size() == 8);
  LocalAlgebra axes(I(r, {"xy", "xz", "yz"}));
  CHECK(!axes.is_artinian());
  CHECK_THROWS_AS(axes.kbase(), Error);
  auto kb = LocalAlgebra(I(r, {"x^2", "y", "z"})).kbase();
  REQUIRE(kb.size() == 2);
  CHECK(kb[0].is_one());
}

TEST_CASE("milnor and tjurina numbers") {
  RingPtr r = xyz();
  CHECK(milnor_number(P("x^2+y^2+z^2", r)) == 1u);
  CHECK(tjurina_number(P("x^2+y^2+z^2", r)) == 1u);
  CHECK(milnor_number(P("x^4+y^3+z^3+xyz", r)) == 9u);
  CHECK(tjurina_number(P("x^4+y^3+z^3+xyz", r)) == 8u);
  CHECK(!milnor_number(P("y^3+z^3+xyz", r)).has_value());
  CHECK_THROWS_AS(jacobian_ideal(P("1 + x^2", r)), Error);
}

TEST_CASE("multiplication matrix") {
  RingPtr r = xyz();
  LocalAlgebra q(jacobian_ideal(P("x^4+y^3+z^3+xyz", r)));
  Matrix id = q.mult_matrix(P("1", r));
  for (std::size_t i = 0; i < id.size(); ++i)
    for (std::size_t j = 0; j < id.size(); ++j) CHECK(id[i][j] == FieldElement(i == j ? 1 : 0));
  Matrix mf = q.mult_matrix(P("x^4+y^3+z^3+xyz", r));
  CHECK(mf.size() - rank(mf) == 8);
  RingPtr r2 = make_ring({"x", "y"}, TermOrder::local());
  LocalAlgebra a1(jacobian_ideal(P("x^2+y^2", r2)));
  Matrix z = a1.mult_matrix(P("x^2+y^2", r2));
  REQUIRE(z.size() == 1);
  CHECK(z[0][0].is_zero());
}

TEST_CASE("annihilator check") {
  RingPtr r2 = make_ring({"x", "y"}, TermOrder::local());
  auto w12 = annihilator_check(P("x^4+y^5+x^2*y^3", r2));
  CHECK(w12.mu == 12);
  CHECK(w12.tau == 11);
  CHECK(w12.dim_ann == 11);
  CHECK(w12.equals_maximal_ideal);
  CHECK(w12.mf_in_mJ);
  auto p8 = annihilator_check(P("x^3+y^3+z^3+xyz", xyz()));
  CHECK(p8.dim_ann == 8);
  CHECK(p8.tau == 8);
  RingPtr r1 = make_ring({"x"}, TermOrder::local());
  auto a1 = annihilator_check(P("x^2", r1));
  CHECK(a1.mu == 1);
  CHECK(a1.dim_ann == 1);
}

TEST_CASE("hilbert function and embdim") {
  RingPtr r = xyz();
  LocalAlgebra axes(I(r, {"xy", "xz", "yz"}));
  CHECK(axes.hilbert_function(0) == 1);
  for (int k = 1; k < 6; ++k) CHECK(axes.hilbert_function(k) == 3);
  LocalAlgebra point(I(r, {"x", "y", "z"}));
  CHECK(point.hilbert_function(0) == 1);
  CHECK(point.hilbert_function(1) == 0);
}

TEST_CASE("reduced normal form") {
  RingPtr r = make_ring({"x"}, TermOrder::local());
  LocalAlgebra a(I(r, {"x^2 - x^3"}));
  CHECK(a.reduced_normal_form(P("x^2 - x^3", r)).is_zero());
  // x^2 lies in (x^2 (1 - x)) since 1 - x is a unit
  CHECK(a.reduced_normal_form(P("x^2", r)).is_zero());
  CHECK(a.reduced_normal_form(P("3x + x^5", r)) == P("3x", r));
  RingPtr r2 = make_ring({"x", "y"}, TermOrder::local());
  LocalAlgebra b(I(r2, {"x^2 + y^3", "xy"}));
  Poly g = P("y^3 + 2x + x*y^7", r2);
  Poly h = b.reduced_normal_form(g);
  CHECK(ideal_membership(g - h, b.standard_basis()));
  for (const auto& t : h.terms()) CHECK(!b.standard_basis().lead_ideal_contains(t.mono));
}

TEST_CASE("local invariants at a shifted point") {
  RingPtr r = make_ring({"x"}, TermOrder::local());
  // x^2 is a unit near -1, so the germ there is smooth; the double factor sits at 0
  auto inv = local_invariants_at(P("x^2*(x+1)", r), {FieldElement(-1)});
  CHECK(inv.mu == 0u);
  auto a1 = local_invariants_at(P("x*(x+1)^2", r), {FieldElement(-1)});
  CHECK(a1.mu == 1u);
  CHECK(a1.tau == 1u);
  auto origin = local_invariants_at(P("x^2*(x+1)", r), {FieldElement(0)});
  CHECK(origin.mu == 1u);
  RingPtr r3 = xyz();
  auto t = local_invariants_at(P("x^4+y^3+z^3+xyz", r3), {0, 0, 0});
  CHECK(t.mu == 9u);
  CHECK(t.tau == 8u);
}

TEST_CASE("quasihomogeneity") {
  RingPtr r = xyz();
  CHECK(is_quasihomogeneous(P("x^3+y^3+z^3+xyz", r)));
  CHECK(!is_quasihomogeneous(P("x^5+y^4+z^3+xyz", r)));
  CHECK(is_quasihomogeneous(P("x^2", make_ring({"x"}, TermOrder::local()))));
}

TEST_CASE("minimal embedding") {
  RingPtr r = make_ring({"s1", "s2", "s3"}, TermOrder::local());
  Embedding e = minimal_embedding(I(r, {"s3 - s1^2", "s1^3", "s2^2"}));
  CHECK(e.ideal.ring->vars == std::vector<std::string>{"s1", "s2"});
  REQUIRE(e.ideal.gens.size() == 2);
  CHECK(to_string(e.ideal.gens[0]) == "s1^3");
  CHECK(to_string(e.ideal.gens[1]) == "s2^2");
  CHECK(to_string(e.images[2]) == "s1^2");
  // self-referential tail in an Artinian quotient
  RingPtr r2 = make_ring({"a", "b"}, TermOrder::local());
  Embedding s = minimal_embedding(I(r2, {"b - a^2 - b^2", "a^4"}));
  LocalAlgebra before(I(r2, {"b - a^2 - b^2", "a^4"}));
  LocalAlgebra after(s.ideal);
  CHECK(before.dimension() == after.dimension());
  for (int k = 0; k < 5; ++k) CHECK(before.hilbert_function(k) == after.hilbert_function(k));
  // non-Artinian with a self-referential tail is reported
  CHECK_THROWS_AS(minimal_embedding(I(r2, {"b - a*b"})), Error);
}
