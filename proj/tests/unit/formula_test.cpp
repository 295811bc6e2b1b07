#include <set>
#include <stdexcept>
#include <unordered_set>

#include "doctest.h"
#include "pdm/formula.hpp"

using pdm::formula;
using pdm::op;

TEST_CASE("rendering uses minimal parentheses") {
  formula a = formula::atom("a");
  formula b = formula::atom("b");
  formula c = formula::atom("c");

  CHECK(a.text() == "a");
  CHECK(formula::tt().text() == "true");
  CHECK(formula::ff().text() == "false");
  CHECK(formula::lnot(a).text() == "!a");
  CHECK(formula::land(a, b).text() == "a & b");
  CHECK(formula::lor(a, b).text() == "a | b");
  CHECK(formula::until(a, b).text() == "a U b");
  CHECK(formula::next(a).text() == "X a");
  CHECK(formula::eventually(a).text() == "F a");
  CHECK(formula::globally(a).text() == "G a");

  // Tighter-binding children stay bare, looser ones get wrapped.
  CHECK(formula::lor(a, formula::land(b, c)).text() == "a | b & c");
  CHECK(formula::land(a, formula::lor(b, c)).text() == "a & (b | c)");
  CHECK(formula::until(formula::lor(a, b), c).text() == "a | b U c");
  CHECK(formula::lnot(formula::land(a, b)).text() == "!(a & b)");
  CHECK(formula::lnot(formula::next(a)).text() == "!X a");
  CHECK(formula::next(formula::land(a, b)).text() == "X (a & b)");
  CHECK(formula::eventually(formula::globally(a)).text() == "F G a");

  // Right-associative reading: only a LEFT nested same-precedence child
  // needs parentheses.
  CHECK(formula::land(a, formula::land(b, c)).text() == "a & b & c");
  CHECK(formula::land(formula::land(a, b), c).text() == "(a & b) & c");
  CHECK(formula::until(a, formula::until(b, c)).text() == "a U b U c");
  CHECK(formula::until(formula::until(a, b), c).text() == "(a U b) U c");
}

TEST_CASE("equality, ordering and hashing follow the rendering") {
  formula a = formula::atom("a");
  formula b = formula::atom("b");
  formula x = formula::land(a, b);
  formula y = formula::land(formula::atom("a"), formula::atom("b"));

  CHECK(x == y);
  CHECK(std::hash<formula>{}(x) == std::hash<formula>{}(y));
  CHECK(formula::eventually(a) != formula::globally(a));
  CHECK(a < b);
  CHECK((x < y) == false);

  std::unordered_set<formula> seen;
  seen.insert(x);
  CHECK(seen.count(y) == 1);
}

TEST_CASE("structural accessors") {
  formula f = formula::until(formula::atom("p"),
                             formula::lnot(formula::atom("q")));
  CHECK(f.kind() == op::until);
  CHECK(f.left().kind() == op::atom);
  CHECK(f.left().name() == "p");
  CHECK(f.right().kind() == op::lnot);
  CHECK(f.right().left().name() == "q");
  CHECK(f.size() == 4);
  CHECK(f.is_binary());
  CHECK(!f.is_unary());
  CHECK(!f.is_constant());
  CHECK(formula::tt().is_constant());
}

TEST_CASE("props and temporal-freeness") {
  formula f = formula::lor(
      formula::atom("b"),
      formula::eventually(formula::land(formula::atom("a"),
                                        formula::atom("b"))));
  CHECK(f.props() == std::set<std::string>{"a", "b"});
  CHECK(!f.is_temporal_free());
  CHECK(formula::land(formula::atom("a"), formula::tt()).is_temporal_free());
}

TEST_CASE("contains can skip X-guarded occurrences") {
  formula f = formula::lor(
      formula::atom("a"),
      formula::next(formula::eventually(formula::atom("b"))));
  CHECK(f.contains("a"));
  CHECK(f.contains("a", false));
  CHECK(f.contains("b"));
  CHECK(!f.contains("b", false));
  CHECK(!f.contains("zzz"));
}

TEST_CASE("atom names must be non-empty; odd characters are tolerated") {
  CHECK_THROWS_AS(formula::atom(""), std::invalid_argument);
  // Step-stamped names like a@3 never collide with parseable input.
  CHECK(formula::atom("a@3").text() == "a@3");
}
