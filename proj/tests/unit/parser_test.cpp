#include <random>

#include "doctest.h"
#include "pdm/errors.hpp"
#include "pdm/formula.hpp"
#include "pdm/parser.hpp"
#include "support/gen.hpp"

using pdm::formula;
using pdm::op;
using pdm::parse;

TEST_CASE("precedence: U below | below & below unary") {
  formula f = parse("a | b U c");
  REQUIRE(f.kind() == op::until);
  CHECK(f.left().text() == "a | b");
  CHECK(f.right().text() == "c");

  f = parse("a | b & c");
  REQUIRE(f.kind() == op::lor);
  CHECK(f.right().kind() == op::land);

  f = parse("!a & b");
  REQUIRE(f.kind() == op::land);
  CHECK(f.left().kind() == op::lnot);

  f = parse("X F a");
  REQUIRE(f.kind() == op::next);
  CHECK(f.left().kind() == op::eventually);

  f = parse("G a U b");
  REQUIRE(f.kind() == op::until);
  CHECK(f.left().kind() == op::globally);
}

TEST_CASE("binary operators associate to the right") {
  CHECK(parse("a & b & c").left().kind() == op::atom);
  CHECK(parse("a U b U c").right().kind() == op::until);
  CHECK(parse("(a U b) U c").left().kind() == op::until);
}

TEST_CASE("constants and identifiers") {
  CHECK(parse("true").kind() == op::tt);
  CHECK(parse("false").kind() == op::ff);
  CHECK(parse("true U a").kind() == op::until);
  CHECK(parse("_x9").name() == "_x9");
  CHECK(parse("Until").name() == "Until");  // only bare 'U' is reserved
  CHECK(parse("Xa").name() == "Xa");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse(""), pdm::parse_error);
  CHECK_THROWS_AS(parse("a &"), pdm::parse_error);
  CHECK_THROWS_AS(parse("(a"), pdm::parse_error);
  CHECK_THROWS_AS(parse("a b"), pdm::parse_error);
  CHECK_THROWS_AS(parse("a)"), pdm::parse_error);
  CHECK_THROWS_AS(parse("9a"), pdm::parse_error);
  CHECK_THROWS_AS(parse("U a"), pdm::parse_error);
  CHECK_THROWS_AS(parse("a @ b"), pdm::parse_error);

  try {
    parse("a |\n| b");
    FAIL("expected a parse error");
  } catch (const pdm::parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("atom name validation") {
  CHECK(pdm::is_valid_atom_name("a"));
  CHECK(pdm::is_valid_atom_name("_x"));
  CHECK(pdm::is_valid_atom_name("ab_9"));
  CHECK(!pdm::is_valid_atom_name(""));
  CHECK(!pdm::is_valid_atom_name("9a"));
  CHECK(!pdm::is_valid_atom_name("a@3"));
  CHECK(!pdm::is_valid_atom_name("U"));
  CHECK(!pdm::is_valid_atom_name("true"));
}

TEST_CASE("rendered text parses back to an equal formula") {
  std::mt19937_64 rng(20260818);
  const std::vector<std::string> atoms = {"a", "b", "c", "d_1"};
  for (int i = 0; i < 500; ++i) {
    formula f = testgen::random_formula(rng, atoms, 5);
    CAPTURE(f.text());
    CHECK(parse(f.text()) == f);
  }
}
