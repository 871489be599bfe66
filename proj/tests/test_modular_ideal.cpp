#include "doctest.h"
#include "singkit/catalog.hpp"
#include "singkit/local_algebra.hpp"
#include "singkit/modular_ideal.hpp"
#include "singkit/parser.hpp"

using namespace singkit;

namespace {

bool hyperbolic(int p, int q, int r) { return q * r + p * r + p * q < p * q * r; }

Poly P(const char* s, const RingPtr& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("coefficients") {
  CHECK(coefficient_a(4, 3, 3) == Rational(3));
  CHECK(coefficient_a(5, 4, 3) == Rational(13));
  CHECK(coefficient_a(3, 3, 3) == Rational(0));
  CHECK(coefficient_c(5, 4, 3, 2) == Rational(52));
  CHECK(coefficient_c(4, 3, 3, 4) == Rational(0));
  CHECK(coefficient_c(4, 3, 3, 2) == Rational(0));  // a(3,3,3) = 0 enters at i = 2
  CHECK(coefficient_d(5, 4, 3, 3) == coefficient_e(5, 3, 4, 3));
  CHECK(coefficient_d(5, 4, 3, 2) == coefficient_c(4, 5, 3, 2));
  CHECK_THROWS_AS(coefficient_c(3, 3, 3, 2), Error);
  CHECK_THROWS_AS(modular_ideal(4, 4, 2), Error);
}

TEST_CASE("coefficient symmetry") {
  for (int p = 2; p <= 8; ++p)
    for (int q = 2; q <= 8; ++q)
      for (int r = 2; r <= 8; ++r) {
        if (!hyperbolic(p, q, r)) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        CHECK(coefficient_d(p, q, r, q) == coefficient_c(q, p, r, q));
        CHECK(coefficient_e(p, q, r, r) == coefficient_c(r, q, p, r));
        CHECK(coefficient_d(p, q, r, q) == coefficient_e(p, r, q, q));
      }
}

TEST_CASE("reduced ideal of T444") {
  Ideal I = reduced_modular_ideal(4, 4, 4);
  REQUIRE(I.gens.size() == 3u);
  CHECK(I.gens[0] == P("u1*v1", I.ring));
  CHECK(I.gens[1] == P("t1*v1", I.ring));
  CHECK(I.gens[2] == P("t1*u1", I.ring));
}

TEST_CASE("full modular ideal") {
  ModularIdealData d = modular_ideal(5, 4, 3);
  CHECK(d.a == Rational(13));
  CHECK(d.ideal.ring->nvars() == 5u + 3u + 2u);
  CHECK(LocalAlgebra(d.ideal).dimension() == 11u);
  CHECK(LocalAlgebra(d.reduced).dimension() == 11u);
  CHECK(d.c.at(2) == Rational(52));

  ModularIdealData e = modular_ideal(4, 3, 3);
  CHECK(!LocalAlgebra(e.reduced).is_artinian());
  CHECK(!LocalAlgebra(e.ideal).is_artinian());
}

TEST_CASE("subseries profile") {
  SubseriesProfile s = subseries_profile(5, 4, 3);
  CHECK(s.line_components == 0);
  CHECK(s.vanishing().empty());
  s = subseries_profile(6, 4, 2);
  CHECK(s.line_components == 2);
  CHECK(s.vanishing() == std::vector<std::string>{"c_p", "d_q"});
  CHECK(subseries_profile(4, 4, 4).line_components == 3);
  CHECK(subseries_profile(6, 3, 3).line_components == 3);
  CHECK(subseries_profile(5, 3, 3).vanishing() == std::vector<std::string>{"c_p"});
  CHECK(in_subseries(5, 3, 3));
  CHECK(in_subseries(3, 5, 3));
  CHECK(!in_subseries(5, 4, 3));
}

TEST_CASE("vanishing agreement and dimension law") {
  for (int p = 2; p <= 16; ++p)
    for (int q = 2; q <= p; ++q)
      for (int r = 2; r <= q; ++r) {
        if (p + q + r > 20 || !hyperbolic(p, q, r)) continue;
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        SubseriesProfile s = subseries_profile(p, q, r);
        CHECK(s.c_vanishes == (coefficient_c(p, q, r, p) == 0));
        CHECK(s.d_vanishes == (coefficient_d(p, q, r, q) == 0));
        CHECK(s.e_vanishes == (coefficient_e(p, q, r, r) == 0));
        auto dim = LocalAlgebra(reduced_modular_ideal(p, q, r)).dimension();
        if (s.line_components == 0) {
          CHECK(dim == static_cast<std::size_t>(p + q + r - 1));
          CHECK(dim == milnor_number(t_series(p, q, r, FieldElement(1))));
        } else {
          CHECK(!dim.has_value());
        }
      }
}
