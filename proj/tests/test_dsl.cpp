#include <doctest.h>

#include "hyspec/dsl.hpp"

using namespace hyspec;

TEST_CASE("basic terms") {
  RingSpec z12 = parse_ring_dsl("Z12");
  CHECK(z12.kind == RingSpec::Kind::Zn);
  CHECK(z12.n == 12);

  RingSpec q = parse_ring_dsl("Z2[x]/(x^2+x+1)");
  CHECK(q.kind == RingSpec::Kind::QuotPoly);
  CHECK(q.n == 2);
  CHECK(q.poly == std::vector<int>{1, 1, 1});

  RingSpec d = parse_ring_dsl("Z2[x]/(x^2)");
  CHECK(d.poly == std::vector<int>{0, 0, 1});

  // whitespace is insignificant
  CHECK(parse_ring_dsl(" Z 12 ").n == 12);
}

TEST_CASE("galois fields") {
  RingSpec g4 = parse_ring_dsl("GF(4)");
  CHECK(g4.kind == RingSpec::Kind::QuotPoly);
  CHECK(g4.n == 2);
  CHECK(g4.poly.size() == 3);
  CHECK(g4.label == "GF(2^2)");

  RingSpec g9 = parse_ring_dsl("GF(9)");
  CHECK(g9.n == 3);
  CHECK(g9.poly.size() == 3);

  RingSpec g5 = parse_ring_dsl("GF(5)");
  CHECK(g5.kind == RingSpec::Kind::Zn);
  CHECK(g5.n == 5);

  CHECK(parse_ring_dsl("GF(2^3)").poly.size() == 4);
  CHECK_THROWS_AS(parse_ring_dsl("GF(6)"), ParseError);

  // the generated polynomial really yields a field
  FiniteRing f9 = build_ring(g9);
  for (int a = 1; a < f9.size(); ++a) {
    bool inv = false;
    for (int b = 1; b < f9.size(); ++b)
      if (f9.mul(a, b) == f9.one()) inv = true;
    CHECK(inv);
  }
}

TEST_CASE("products split on x at depth 0 only") {
  RingSpec p = parse_ring_dsl("Z4 x GF(4)");
  REQUIRE(p.kind == RingSpec::Kind::Product);
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors[0].n == 4);
  CHECK(p.factors[1].kind == RingSpec::Kind::QuotPoly);

  // the x's inside the polynomial must not split the product
  RingSpec q = parse_ring_dsl("Z2[x]/(x^2+x+1) x Z3");
  REQUIRE(q.kind == RingSpec::Kind::Product);
  CHECK(q.factors[0].poly == std::vector<int>{1, 1, 1});
  CHECK(q.factors[1].n == 3);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_ring_dsl("Q12");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 0);
  }
  try {
    parse_ring_dsl("Z12 junk!");  // strips to "Z12junk!"
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
  CHECK_THROWS_AS(parse_ring_dsl(""), ParseError);
  CHECK_THROWS_AS(parse_ring_dsl("Z12 x"), ParseError);
  CHECK_THROWS_AS(parse_ring_dsl("GF(4"), ParseError);
}

TEST_CASE("polynomial parsing") {
  CHECK(parse_poly("x^2+x+1", 2) == std::vector<int>{1, 1, 1});
  CHECK(parse_poly("2x^2+3", 4) == std::vector<int>{3, 0, 2});
  // coefficients add mod n: 1 + 2 = 0 mod 3, so the degree collapses
  CHECK(parse_poly("x^2+2x^2", 3) == std::vector<int>{0});
  CHECK(parse_poly("x^2+2x^2+x", 3) == std::vector<int>{0, 1});
  CHECK(parse_poly("5", 3) == std::vector<int>{2});
  CHECK_THROWS_AS(parse_poly("x^2++1", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x^2+", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("", 2), ParseError);
}
