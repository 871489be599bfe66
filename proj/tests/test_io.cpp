#include "doctest.h"
#include "singkit/cases.hpp"
#include "singkit/io.hpp"
#include "singkit/parser.hpp"

using namespace singkit;

TEST_CASE("ideal files") {
  Ideal I = parse_ideal_text(
      "# T_{4,3,3}\n"
      "vars: x, y, z\n"
      "order: local\n"
      "4x^3 + yz\n"
      "\n"
      "3y^2 + xz   # second partial\n"
      "3z^2 + xy\n");
  REQUIRE(I.gens.size() == 3u);
  CHECK(I.ring->vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(I.ring->order.is_local());
  CHECK(I.gens[0] == parse_polynomial("4*x^3+y*z", I.ring));

  Ideal back = parse_ideal_text(format_ideal(I));
  CHECK(back.ring->vars == I.ring->vars);
  REQUIRE(back.gens.size() == 3u);
  for (std::size_t i = 0; i < 3; ++i) CHECK(to_string(back.gens[i]) == to_string(I.gens[i]));
}

TEST_CASE("field header") {
  Ideal I = parse_ideal_text("vars: x\norder: global\nminpoly: theta^2 + 1386/6089\ntheta*x^2\n");
  CHECK(I.ring->field.degree() == 2);
  CHECK(!I.ring->order.is_local());
  Ideal back = parse_ideal_text(format_ideal(I));
  CHECK(back.ring->field == I.ring->field);
  CHECK(to_string(back.gens[0]) == to_string(I.gens[0]));
}

TEST_CASE("empty ideal") {
  Ideal I = parse_ideal_text("vars: x, y\norder: local\n");
  CHECK(I.gens.empty());
  CHECK(!LocalAlgebra(I).is_artinian());
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_ideal_text("vars: x, y\norder: local\nx^2 + w\n");
    FAIL("accepted an undeclared variable");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3u);
    CHECK(e.column() == 7u);
  }
  try {
    parse_ideal_text("vars: x\norder: sideways\nx\n");
    FAIL("accepted an unknown order");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2u);
  }
  CHECK_THROWS_AS(parse_ideal_text("x^2\n"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_text("vars: x\nx^2 +\n"), SyntaxError);
  CHECK_THROWS_AS(load_ideal("/nonexistent/a.ideal"), Error);
}

TEST_CASE("map files") {
  AlgebraMap m = parse_map_text(
      "vars: x, y\n"
      "minpoly: theta^2 - 2\n"
      "s2 -> theta*x\n"
      "s1 -> y + y^2\n");
  CHECK(m.source->vars == std::vector<std::string>{"s2", "s1"});
  CHECK(m.target->field.degree() == 2);
  RingPtr src = make_ring({"s1", "s2"}, TermOrder::local());
  AlgebraMap a = align_map(m, src);
  CHECK(to_string(a.images[0]) == to_string(parse_polynomial("y + y^2", m.target)));
  AlgebraMap back = parse_map_text(format_map(a));
  REQUIRE(back.images.size() == 2u);
  CHECK(to_string(back.images[1]) == to_string(a.images[1]));
  CHECK_THROWS_AS(parse_map_text("vars: x\norder: local\ns1 -> x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_map_text("vars: x\ns1 = x\n"), SyntaxError);
  CHECK_THROWS_AS(align_map(m, make_ring({"s1", "s3"}, TermOrder::local())), Error);
}

TEST_CASE("shape files") {
  auto s = parse_shape_text("s1: y, y^2\ns2: x\n");
  REQUIRE(s.size() == 2u);
  CHECK(s["s1"] == std::vector<std::string>{"y", "y^2"});
  CHECK(s["s2"] == std::vector<std::string>{"x"});
  CHECK_THROWS_AS(parse_shape_text("s1 y\n"), SyntaxError);
}

TEST_CASE("case runner") {
  CaseReport r = run_case("tseries:5,4,3");
  CHECK(r.passed());
  bool saw_mu = false;
  for (const auto& [k, v] : r.invariants)
    if (k == "mu") {
      saw_mu = true;
      CHECK(v == "11");
    }
  CHECK(saw_mu);
  CHECK(run_case("symmetric:4,4,4").passed());
  CHECK(run_case("w12").passed());
  CHECK(!run_case("s11").passed());
  CHECK(registered_cases().size() == 15u);
  CHECK_THROWS_AS(run_case("nonsense"), Error);
  CHECK_THROWS_AS(run_case("tseries:5,4"), Error);
  std::string text = format_report(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(report_json(r).find("\"mu\"") != std::string::npos);
}
