#include <catch2/catch_amalgamated.hpp>

#include <cayley/expr.hpp>

using namespace cayley;

namespace {

CountSeq seq(std::vector<long> v) {
  CountSeq r;
  for (long x : v) r.a.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("glossary examples") {
  CHECK(expr::evaluate("L o E+", 5) == seq({1, 1, 3, 13, 75, 541}));
  CHECK(expr::evaluate("Eeven . E", 4) == seq({1, 1, 2, 4, 8}));
  CHECK(expr::evaluate("1 + int((E.E))", 4) == seq({1, 1, 2, 4, 8}));
}

TEST_CASE("atoms") {
  CHECK(expr::evaluate("E", 3) == series::make_E(3));
  CHECK(expr::evaluate("E+", 3) == series::make_E_plus(3));
  CHECK(expr::evaluate("Eeven", 4) == series::make_E_even(4));
  CHECK(expr::evaluate("Eodd", 4) == series::make_E_odd(4));
  CHECK(expr::evaluate("E[2]", 4) == series::make_E_exactly(2, 4));
  CHECK(expr::evaluate("X", 3) == series::make_X(3));
  CHECK(expr::evaluate("1", 3) == series::make_one(3));
  CHECK(expr::evaluate("L", 4) == series::make_L(4));
  CHECK(expr::evaluate("C", 4) == series::make_cyc(4));
  CHECK(expr::evaluate("Cat", 5) == seq({1, 1, 2, 5, 14, 42}));
  CHECK(expr::evaluate("Fub", 5) == seq({1, 1, 3, 13, 75, 541}));
}

TEST_CASE("postfix operators") {
  // L' = L^2 at the counting level: (n+1)!
  CHECK(expr::evaluate("L'", 3) == seq({1, 2, 6, 24}));
  CHECK(expr::evaluate("L'", 3) == expr::evaluate("L . L", 3));
  CHECK(expr::evaluate("E''", 4) == series::make_E(4));
  CHECK(expr::evaluate("L ptg", 4) == seq({0, 1, 4, 18, 96}));
  // pointing commutes with the X-product rule F^ptg = X . F'
  CHECK(expr::evaluate("Fub ptg", 6) == expr::evaluate("X . Fub'", 6));
}

TEST_CASE("integral and convolution") {
  CHECK(expr::evaluate("int(E)", 4) == seq({0, 1, 1, 1, 1}));
  CHECK(expr::evaluate("1 ** E", 4) == expr::evaluate("int(E)", 4));
  CHECK(expr::evaluate("L odot L", 4) == series::ordinal_product(series::make_L(4),
                                                                 series::make_L(4)));
  // S = E + E*S^ptg
  CHECK(expr::evaluate("E + (E ** (L ptg))", 6) == series::make_L(6));
}

TEST_CASE("precedence") {
  // composition binds tighter than product: E . E o C = E . (E o C) = E . L
  CHECK(expr::evaluate("E . E o C", 5) ==
        series::species_product(series::make_E(5), series::make_L(5)));
  // product binds tighter than sum
  CHECK(expr::evaluate("X + E . E", 4) ==
        series::add(series::make_X(4),
                    series::species_product(series::make_E(4), series::make_E(4))));
  // postfix binds tighter than composition: the derivative applies to E[2] alone
  CHECK(expr::evaluate("L o E[2]'", 4) == expr::evaluate("L o X", 4));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(expr::evaluate("E +", 3), expr::ParseError);
  CHECK_THROWS_AS(expr::evaluate("(E", 3), expr::ParseError);
  CHECK_THROWS_AS(expr::evaluate("Q", 3), expr::ParseError);
  CHECK_THROWS_AS(expr::evaluate("E * E", 3), expr::ParseError);
  CHECK_THROWS_AS(expr::evaluate("E+X", 3), expr::ParseError);  // lexes as E+ then X
  CHECK_THROWS_AS(expr::evaluate("E[", 3), expr::ParseError);
  try {
    expr::evaluate("E . (X", 3);
    FAIL("expected a parse error");
  } catch (const expr::ParseError& e) {
    CHECK(e.position() == 7);  // just past the end
  }

  // mixing product operators without parentheses is rejected
  CHECK_THROWS_AS(expr::evaluate("E . E ** E", 4), expr::ParseError);
  CHECK_NOTHROW(expr::evaluate("(E . E) ** E", 4));
  CHECK_NOTHROW(expr::evaluate("E . E . E", 4));
}

TEST_CASE("composition requires a zero constant term") {
  CHECK_THROWS_AS(expr::evaluate("E o L", 4), std::invalid_argument);
  CHECK_NOTHROW(expr::evaluate("E o E+", 4));
}
