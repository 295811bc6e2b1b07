#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdm/bench.hpp"
#include "pdm/parser.hpp"
#include "pdm/patterns.hpp"
#include "support/oracle.hpp"

using namespace pdm;

TEST_CASE("the catalog names nine templates") {
  const std::vector<pattern>& cat = pattern_catalog();
  REQUIRE(cat.size() == 9);
  std::set<std::string> names;
  for (const pattern& p : cat) {
    names.insert(p.name);
    CHECK(p.arity >= 1);
    CHECK(p.arity <= 4);
  }
  CHECK(names.count("absence"));
  CHECK(names.count("existence"));
  CHECK(names.count("universal"));
  CHECK(names.count("response"));
  CHECK(names.count("precedence"));
  CHECK(names.count("bounded-existence"));
  CHECK(names.count("precedence-chain"));
  CHECK(names.count("response-chain"));
  CHECK(names.count("constrained-chain"));
}

TEST_CASE("templates instantiate to the expected shapes") {
  CHECK(instantiate_pattern("absence", {"p"}) == parse("G !p"));
  CHECK(instantiate_pattern("existence", {"p"}) == parse("F p"));
  CHECK(instantiate_pattern("universal", {"p"}) == parse("G p"));
  CHECK(instantiate_pattern("response", {"p", "q"}) == parse("G (!p | F q)"));
  CHECK(instantiate_pattern("precedence", {"p", "q"}) ==
        parse("(!p U q) | G !p"));

  // The longer templates at least parse, close over their atoms, and stay
  // within the declared arity.
  for (const pattern& p : pattern_catalog()) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < p.arity; ++i)
      atoms.push_back("v" + std::to_string(i + 1));
    formula f = instantiate_pattern(p.name, atoms);
    CHECK(f.props() == std::set<std::string>(atoms.begin(), atoms.end()));
  }

  CHECK_THROWS_AS(instantiate_pattern("no-such-template", {"p"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate_pattern("absence", {"p", "q"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate_pattern("response", {"p"}),
                  std::invalid_argument);
}

TEST_CASE("templates mean what their names say") {
  // Spot-check against the reference word semantics on short lassos.
  using oracle::lasso;
  auto holds = [](const formula& f, const lasso& w) {
    return oracle::ltl_holds(f, w);
  };

  formula resp = instantiate_pattern("response", {"p", "q"});
  lasso good{{{{"p", true}, {"q", false}}, {{"p", false}, {"q", true}}}, 1};
  lasso bad{{{{"p", true}, {"q", false}}}, 0};
  CHECK(holds(resp, good));
  CHECK(!holds(resp, bad));

  formula prec = instantiate_pattern("precedence", {"p", "q"});
  lasso q_first{{{{"p", false}, {"q", true}}, {{"p", true}, {"q", false}}}, 1};
  lasso p_first{{{{"p", true}, {"q", false}}, {{"p", false}, {"q", true}}}, 1};
  lasso never{{{{"p", false}, {"q", false}}}, 0};
  CHECK(holds(prec, q_first));
  CHECK(!holds(prec, p_first));
  CHECK(holds(prec, never));

  formula bounded = instantiate_pattern("bounded-existence", {"p"});
  // At most two rising p-blocks: constant p is one block, fine; p
  // recurring in separated blocks forever is not.
  lasso constant_p{{{{"p", true}}}, 0};
  lasso blink{{{{"p", true}}, {{"p", false}}}, 0};
  CHECK(holds(bounded, constant_p));
  CHECK(!holds(bounded, blink));
}

TEST_CASE("generated traces are full, fair and reproducible") {
  std::vector<std::string> atoms = {"b", "a"};
  std::mt19937_64 rng1(99u), rng2(99u), rng3(100u);
  trace t1 = gen_trace(rng1, atoms, 64);
  trace t2 = gen_trace(rng2, atoms, 64);
  trace t3 = gen_trace(rng3, atoms, 64);

  CHECK(t1.atoms == std::vector<std::string>{"a", "b"});  // sorted
  REQUIRE(t1.steps.size() == 64);
  for (const auto& step : t1.steps) CHECK(step.size() == 2);
  CHECK(t1.steps == t2.steps);
  CHECK(t1.steps != t3.steps);

  std::size_t ones = 0;
  for (const auto& step : t1.steps) ones += step.at("a") ? 1 : 0;
  CHECK(ones > 16);  // a fair coin drifting this far is broken
  CHECK(ones < 48);
}

TEST_CASE("bench topology splits private atom pairs") {
  topology t = bench_topology(3);
  REQUIRE(t.procs.size() == 3);
  CHECK(t.procs[0].name == "A");
  CHECK(t.procs[0].atoms == std::set<std::string>{"x1", "x2"});
  CHECK(t.procs[2].atoms == std::set<std::string>{"x5", "x6"});
  CHECK(t.all_atoms().size() == 6);
}

TEST_CASE("pattern draws are deterministic per seed") {
  topology t = bench_topology(3);
  formula f1 = gen_pattern("response", t, 7u);
  formula f2 = gen_pattern("response", t, 7u);
  formula f3 = gen_pattern("response", t, 8u);
  CHECK(f1 == f2);
  CHECK((f1 == f3 || !(f1 == f3)));  // distinct seeds may still collide
  std::set<std::string> alphabet = t.all_atoms();
  for (const std::string& v : f1.props()) CHECK(alphabet.count(v));
}

TEST_CASE("a tiny benchmark runs end to end") {
  bench_config cfg;
  cfg.pattern_class = "existence";
  cfg.count = 3;
  cfg.procs = 2;
  cfg.trace_len = 8;
  cfg.seed = 5;
  bench_row row = run_bench_class(cfg);
  CHECK(row.count == 3);
  CHECK(row.pdm_trace > 0);
  CHECK(row.bf_trace > 0);
  CHECK(row.pdm_mem_bits > 0);
  CHECK(row.bf_mem_bits > 0);

  bench_report rep = run_bench({cfg});
  REQUIRE(rep.rows.size() == 1);
  std::string text = rep.to_text();
  CHECK(text.find("existence") != std::string::npos);
  std::string csv = rep.to_csv();
  std::istringstream in(csv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header.find("pattern,monitor") != std::string::npos);
  std::size_t lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 2);  // one monitor row, one baseline row
}
