#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdm/errors.hpp"
#include "pdm/parser.hpp"
#include "pdm/rewrite.hpp"
#include "pdm/table.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace pdm;

namespace {

// Independent recount of an influence weight: walk the rows ourselves and
// use a local occurrence check instead of formula::contains, so a bug in
// either side shows up as a mismatch.
bool occurs(const formula& f, const std::string& var, bool include_residues) {
  switch (f.kind()) {
    case op::tt:
    case op::ff:
      return false;
    case op::atom:
      return f.name() == var;
    case op::lnot:
    case op::eventually:
    case op::globally:
      return occurs(f.left(), var, include_residues);
    case op::next:
      return include_residues && occurs(f.left(), var, include_residues);
    case op::land:
    case op::lor:
    case op::until:
      return occurs(f.left(), var, include_residues) ||
             occurs(f.right(), var, include_residues);
  }
  return false;
}

rational recount_weight(const analysis_table& t, const std::string& var,
                        count_mode counting) {
  std::size_t j = 0;
  while (t.vars[j] != var) ++j;
  std::int64_t hits = 0;
  std::int64_t denom = 0;
  for (const table_row& r : t.rows) {
    if (r.values[j] != truth3::unknown) continue;
    ++denom;
    if (occurs(r.result, var, counting == count_mode::full)) ++hits;
  }
  return rational(hits, denom);
}

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(rational(6, 9) == rational(2, 3));
  CHECK(rational(1, -2) == rational(-1, 2));
  CHECK(rational(0, 5) == rational::integer(0));
  CHECK((rational(1, 3) + rational(1, 6)) == rational(1, 2));
  CHECK((rational(2, 3) * rational(3, 4)) == rational(1, 2));
  CHECK(pow(rational(2, 3), 2) == rational(4, 9));
  CHECK(pow(rational(2, 3), 0) == rational::integer(1));
  CHECK(rational(1, 3) < rational(1, 2));
  CHECK(rational(8, 9).str() == "8/9");
  CHECK(rational::integer(5).str() == "5");
  CHECK(rational(1, 3).value() == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
}

TEST_CASE("rows enumerate ?, F, T with the rightmost variable fastest") {
  analysis_table t = build_table(parse("a | b"), table_mode::propositional);
  REQUIRE(t.vars == std::vector<std::string>{"a", "b"});
  REQUIRE(t.rows.size() == 9);
  const truth3 expect[9][2] = {
      {truth3::unknown, truth3::unknown}, {truth3::unknown, truth3::bot},
      {truth3::unknown, truth3::top},     {truth3::bot, truth3::unknown},
      {truth3::bot, truth3::bot},         {truth3::bot, truth3::top},
      {truth3::top, truth3::unknown},     {truth3::top, truth3::bot},
      {truth3::top, truth3::top},
  };
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(t.rows[i].values[0] == expect[i][0]);
    CHECK(t.rows[i].values[1] == expect[i][1]);
  }
}

TEST_CASE("row count is 3^n and row_assignment inverts the enumeration") {
  for (const char* text : {"a", "a & b", "a | b & c", "a U b | c & d"}) {
    analysis_table t = build_table(parse(text), table_mode::propositional);
    std::size_t n = t.vars.size();
    std::size_t expect_rows = 1;
    for (std::size_t k = 0; k < n; ++k) expect_rows *= 3;
    REQUIRE(t.rows.size() == expect_rows);

    std::set<std::vector<truth3>> seen;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      // Recompute the index from the row's digits, base 3 with ? = 0,
      // F = 1, T = 2.
      assignment a = t.row_assignment(i);
      std::size_t back = 0;
      for (const std::string& v : t.vars)
        back = back * 3 + static_cast<std::size_t>(a.at(v));
      CHECK(back == i);
      seen.insert(t.rows[i].values);
    }
    CHECK(seen.size() == t.rows.size());
  }
}

TEST_CASE("full propositional table of a | b & c") {
  analysis_table t = build_table(parse("a | b & c"), table_mode::propositional);
  REQUIRE(t.vars == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 27);
  const char* expect[27] = {
      "a | b & c", "a",     "a | b", "a",     "a",     "a",     "a | c",
      "a",         "true",  "b & c", "false", "b",     "false", "false",
      "false",     "c",     "false", "true",  "true",  "true",  "true",
      "true",      "true",  "true",  "true",  "true",  "true",
  };
  for (std::size_t i = 0; i < 27; ++i) {
    CAPTURE(i);
    CHECK(t.rows[i].result.text() == expect[i]);
  }

  SUBCASE("influence weights") {
    CHECK(influence_weight(t, "a", count_mode::step_only) == rational(8, 9));
    CHECK(influence_weight(t, "b", count_mode::step_only) == rational(4, 9));
    CHECK(influence_weight(t, "c", count_mode::step_only) == rational(4, 9));
    // No X residues in a propositional table, so counting mode is moot.
    CHECK(influence_weight(t, "a", count_mode::full) == rational(8, 9));
  }

  SUBCASE("configurations sharing a verdict") {
    std::vector<std::size_t> just_a = rows_with_result(t, parse("a"));
    CHECK(just_a == std::vector<std::size_t>{1, 3, 4, 5, 7});
    CHECK(rows_with_result(t, parse("true")).size() == 11);
    CHECK_THROWS_AS(rows_with_result(t, parse("a & b")), target_not_in_table);
  }

  SUBCASE("weight set covers every variable") {
    weight_set w = all_weights(t, count_mode::step_only);
    REQUIRE(w.by_var.size() == 3);
    CHECK(w.by_var.at("a") == rational(8, 9));
    CHECK(w.by_var.at("b") == rational(4, 9));
    CHECK(w.by_var.at("c") == rational(4, 9));
  }
}

TEST_CASE("propositional rows agree with three-valued evaluation") {
  // Oracle: a row's verdict, further evaluated under any definite completion
  // of its unknowns, must match evaluating the source formula on the merged
  // assignment. Exhaustive over all rows and completions for 3 variables.
  std::mt19937_64 rng(20260818u);
  std::vector<std::string> atoms = {"a", "b", "c"};
  for (int iter = 0; iter < 60; ++iter) {
    formula f = testgen::random_formula(rng, atoms, 4, false, true);
    analysis_table t = build_table(f, table_mode::propositional);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      assignment base = t.row_assignment(i);
      std::vector<std::string> unknowns;
      for (const auto& [name, v] : base)
        if (v == truth3::unknown) unknowns.push_back(name);
      for (std::uint32_t mask = 0; mask < (1u << unknowns.size()); ++mask) {
        assignment merged = base;
        for (std::size_t k = 0; k < unknowns.size(); ++k)
          merged[unknowns[k]] =
              (mask >> k) & 1u ? truth3::top : truth3::bot;
        CAPTURE(f.text());
        CAPTURE(i);
        CHECK(oracle::tri_eval(t.rows[i].result, merged) ==
              oracle::tri_eval(f, merged));
      }
    }
  }
}

TEST_CASE("progression rows keep their X residues") {
  SUBCASE("F a") {
    analysis_table t = build_table(parse("F a"), table_mode::progression);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].result.text() == "X F a | a");
    CHECK(t.rows[1].result.text() == "X F a");
    CHECK(t.rows[2].result.text() == "true");
  }
  SUBCASE("G a") {
    analysis_table t = build_table(parse("G a"), table_mode::progression);
    CHECK(t.rows[0].result.text() == "X G a & a");
    CHECK(t.rows[1].result.text() == "false");
    CHECK(t.rows[2].result.text() == "X G a");
  }
  SUBCASE("a U b") {
    analysis_table t = build_table(parse("a U b"), table_mode::progression);
    // Rows are (a,b) with b fastest; the unfolding is b | a & X(a U b).
    CHECK(t.rows[0].result.text() == "X (a U b) & a | b");
    CHECK(t.rows[2].result.text() == "true");   // (?, T)
    CHECK(t.rows[4].result.text() == "false");  // (F, F)
    CHECK(t.rows[6].result.text() == "X (a U b) | b");  // (T, ?) leaves b open
    CHECK(t.rows[8].result.text() == "true");   // (T, T)
  }
}

TEST_CASE("counting mode separates step occurrences from residues") {
  analysis_table t = build_table(parse("F (a & b)"), table_mode::progression);
  // Unfolds to a & b | X F (a & b). With b false the step disjunct dies and
  // a survives only inside the residue, so step counting misses that row.
  CHECK(influence_weight(t, "a", count_mode::step_only) == rational(2, 3));
  CHECK(influence_weight(t, "a", count_mode::full) == rational::integer(1));
  CHECK_THROWS_AS(influence_weight(t, "z", count_mode::full),
                  unknown_variable);
}

TEST_CASE("weights of F (a & b) | G (c & d)") {
  analysis_table t =
      build_table(parse("F (a & b) | G (c & d)"), table_mode::progression);
  REQUIRE(t.rows.size() == 81);

  weight_set step = all_weights(t, count_mode::step_only);
  CHECK(step.by_var.at("a") == rational(2, 3));
  CHECK(step.by_var.at("b") == rational(2, 3));
  CHECK(step.by_var.at("c") == rational(16, 27));
  CHECK(step.by_var.at("d") == rational(16, 27));

  weight_set full = all_weights(t, count_mode::full);
  CHECK(full.by_var.at("a") == rational::integer(1));
  CHECK(full.by_var.at("b") == rational::integer(1));
  CHECK(full.by_var.at("c") == rational(16, 27));
  CHECK(full.by_var.at("d") == rational(16, 27));
}

TEST_CASE("influence weights match an independent recount") {
  std::mt19937_64 rng(4242u);
  std::vector<std::string> atoms = {"a", "b", "c"};
  for (int iter = 0; iter < 80; ++iter) {
    formula f = testgen::random_formula(rng, atoms, 4, true, true);
    if (f.props().empty()) continue;
    table_mode mode =
        f.is_temporal_free() ? table_mode::propositional : table_mode::progression;
    analysis_table t = build_table(f, mode);
    for (const std::string& v : t.vars) {
      for (count_mode cm : {count_mode::step_only, count_mode::full}) {
        rational w = influence_weight(t, v, cm);
        CAPTURE(f.text());
        CAPTURE(v);
        CHECK(w == recount_weight(t, v, cm));
        CHECK(rational::integer(0) < w + rational::integer(1));  // w >= 0
        CHECK(!(rational::integer(1) < w));                      // w <= 1
      }
    }
  }
}

TEST_CASE("subset tables keep the other variables symbolic") {
  formula f = parse("a | b & c");
  analysis_table t = build_table(f, table_mode::propositional,
                                 default_variable_cap,
                                 std::set<std::string>{"b", "c"});
  REQUIRE(t.vars == std::vector<std::string>{"b", "c"});
  REQUIRE(t.rows.size() == 9);
  CHECK(t.rows[0].result.text() == "a | b & c");  // (?, ?)
  CHECK(t.rows[4].result.text() == "a");          // (F, F)
  CHECK(t.rows[8].result.text() == "true");       // (T, T)
  CHECK_THROWS_AS(build_table(f, table_mode::propositional,
                              default_variable_cap,
                              std::set<std::string>{"z"}),
                  unknown_variable);
}

TEST_CASE("variable cap rejects oversized enumerations") {
  formula f = parse("a1 & a2 & a3 & a4");
  CHECK_THROWS_AS(build_table(f, table_mode::propositional, 3),
                  variable_cap_exceeded);
  CHECK_NOTHROW(build_table(f, table_mode::propositional, 4));
  try {
    build_table(f, table_mode::propositional, 3);
  } catch (const variable_cap_exceeded& e) {
    std::string msg = e.what();
    CHECK(msg.find("4") != std::string::npos);
    CHECK(msg.find("3") != std::string::npos);
  }
}

TEST_CASE("csv rendering lists variables then the verdict") {
  analysis_table t = build_table(parse("a & b"), table_mode::propositional);
  std::istringstream in(to_csv(t));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "a,b,result");
  REQUIRE(std::getline(in, line));
  CHECK(line == "?,?,a & b");
  std::size_t count = 1;
  std::string last;
  while (std::getline(in, line)) {
    ++count;
    last = line;
  }
  CHECK(count == 9);
  CHECK(last == "T,T,true");
}
