#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "util.hpp"

using namespace leflab;
using namespace testutil;

TEST_CASE("monomial grammar") {
  CHECK(parse_monomial("x1^2*x3", 3) == Monomial(std::vector<int>{2, 0, 1}));
  CHECK(parse_monomial("1", 3).is_unit());
  CHECK(parse_monomial(" x2 * x2 ", 2) == Monomial(std::vector<int>{0, 2}));
  CHECK_THROWS_AS(parse_monomial("x9", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1 + x2", 3), ParseError);
  CHECK_THROWS_AS(parse_monomial("", 3), ParseError);
}

TEST_CASE("ideal grammar accepts commas and newlines") {
  MonomialIdeal I = parse_monomial_ideal("x1^2, x1*x2\nx2^2", 3);
  CHECK(I == ideal("x1^2, x1*x2, x2^2", 3));
  CHECK_THROWS_AS(parse_monomial_ideal("x1 - x2", 2), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_monomial_ideal("x1^2,\nx9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}

TEST_CASE("polynomial grammar with signs and coefficients") {
  auto fs = parse_polynomials("x1^3 + 2*x2*x3^2 - x3^3", 3, default_prime);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].term_count() == 3);
  CHECK(to_string(fs[0]) == "x1^3 + 2*x2*x3^2 - x3^3");
  // coefficients reduce mod p
  auto gs = parse_polynomials("2147483647*x1 + x2", 2, default_prime);
  CHECK(gs[0].term_count() == 1);
  // cancellation inside one polynomial
  CHECK(parse_polynomials("x1 - x1 + x2", 2, default_prime)[0].term_count() == 1);
  CHECK_THROWS_AS(parse_polynomials("x1 + ", 2, default_prime), ParseError);
}

TEST_CASE("routing: monomial lists become ideals, others polynomials") {
  auto a = parse_ideal("x1^2, x1*x2", 3, default_prime);
  REQUIRE(a.monomial.has_value());
  CHECK(*a.monomial == ideal("x1^2, x1*x2", 3));

  auto b = parse_ideal("x1^3 + x2^3 + x3^3", 3, default_prime);
  CHECK_FALSE(b.monomial.has_value());
  REQUIRE(b.polynomials.size() == 1);
  CHECK(b.polynomials[0].term_count() == 3);
  CHECK(b.polynomials[0].degree() == 3);

  auto c = parse_ideal("2*x1, x2", 3, default_prime);
  CHECK_FALSE(c.monomial.has_value());
  CHECK(c.polynomials.size() == 2);
}

TEST_CASE("hilbert grammar") {
  CHECK(parse_hilbert("1,3,4,3,1") == hseq("1,3,4,3,1"));
  CHECK(parse_hilbert(" 1 , 3 ") == hseq("1,3"));
  CHECK_THROWS_AS(parse_hilbert("1,,3"), ParseError);
  CHECK_THROWS_AS(parse_hilbert("a"), ParseError);
}

TEST_CASE("round trip: format then parse is the identity") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 40; ++rep) {
    MonomialIdeal I = random_artinian_ideal(rng, 3, 5);
    CHECK(parse_monomial_ideal(to_string(I), 3) == I);
    OSequence h = hilbert_function(I);
    CHECK(parse_hilbert(to_string(h)) == h);
  }
  // polynomial round trip, including negative prints
  for (const char* s : {"x1^2 - x2^2", "3*x1*x2 + x3^2", "x1 - 2*x2 + 1"}) {
    auto f = parse_polynomials(s, 3, default_prime)[0];
    CHECK(parse_polynomials(to_string(f), 3, default_prime)[0] == f);
  }
}
