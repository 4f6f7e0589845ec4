#include <doctest.h>

#include <random>

#include "protomc/checker.hpp"
#include "protomc/corpus.hpp"
#include "protomc/errors.hpp"
#include "protomc/io.hpp"
#include "support/generators.hpp"

using namespace protomc;

namespace {

FormulaPtr q() { return ctl::atom("", "q"); }
FormulaPtr r() { return ctl::atom("", "r"); }

StateSet bits(const StateModel& m, std::initializer_list<std::size_t> states) {
  StateSet s(m.num_states());
  for (auto i : states) s.set(i);
  return s;
}

std::vector<std::size_t> trace_states(const Trace& t) {
  std::vector<std::size_t> out;
  for (const auto& step : t.path) out.push_back(step.state);
  return out;
}

}  // namespace

TEST_CASE("pre_exists and pre_forall on the three-state model") {
  const StateModel m = until_triptych();
  const StateSet z = bits(m, {2});
  CHECK(pre_exists(m, z) == bits(m, {0, 1}));
  CHECK(pre_forall(m, z) == bits(m, {2}));  // dead-end C is vacuously included
  CHECK(pre_exists(m, StateSet(3)) == StateSet(3));
  CHECK(pre_forall(m, bits(m, {0, 1, 2})) == bits(m, {0, 1, 2}));
}

TEST_CASE("weak and strong until separate on the three-state model") {
  const StateModel m = until_triptych();

  CHECK(sat(m, *ctl::aw(q(), r())) == bits(m, {0, 1, 2}));
  CHECK(sat(m, *ctl::eu(q(), r())) == bits(m, {0, 1, 2}));
  CHECK(sat(m, *ctl::au(q(), r())) == bits(m, {2}));
  CHECK(sat(m, *ctl::ew(q(), r())) == bits(m, {0, 1, 2}));

  // The initial state A: strong forall-until is the only judgment that fails.
  CHECK(sat(m, *ctl::aw(q(), r())).test(0));
  CHECK(!sat(m, *ctl::au(q(), r())).test(0));
}

TEST_CASE("boolean connectives and deadlock atom") {
  const StateModel m = until_triptych();
  CHECK(sat(m, *ctl::deadlock()) == bits(m, {2}));
  CHECK(sat(m, *ctl::neg(q())) == bits(m, {2}));
  CHECK(sat(m, *ctl::disj(q(), ctl::neg(q()))) == bits(m, {0, 1, 2}));
  CHECK(sat(m, *ctl::implies(q(), q())) == bits(m, {0, 1, 2}));
  CHECK(sat(m, *ctl::conj(q(), r())) == StateSet(3));
}

TEST_CASE("next and future operators respect dead-ends") {
  const StateModel m = until_triptych();
  CHECK(sat(m, *ctl::ex(r())) == bits(m, {0, 1}));
  CHECK(sat(m, *ctl::ax(r())) == bits(m, {2}));   // C vacuously
  CHECK(sat(m, *ctl::ef(r())) == bits(m, {0, 1, 2}));
  CHECK(sat(m, *ctl::ag(q())) == StateSet(3));    // every state reaches the q-less C
  CHECK(sat(m, *ctl::ef(q())) == bits(m, {0, 1}));
  CHECK(sat(m, *ctl::ag(ctl::disj(q(), r()))) == bits(m, {0, 1, 2}));
}

TEST_CASE("unresolvable atoms are reported") {
  const StateModel m = until_triptych();
  CHECK_THROWS_WITH_AS(sat(m, *ctl::atom("", "zz")), doctest::Contains("zz"), Error);
  CHECK_THROWS_AS(oracle_sat(m, *ctl::atom("Seller", "q")), Error);
}

TEST_CASE("fixpoint iterates are recorded, monotone, and bounded") {
  const StateModel m = until_triptych();
  EvalStats stats;
  sat(m, *ctl::au(q(), r()), &stats);
  REQUIRE(stats.runs.size() == 1);
  const FixpointRun& run = stats.runs[0];
  CHECK(run.least);
  CHECK(run.iterates.front() == StateSet(3));
  CHECK(run.iterates.back() == bits(m, {2}));
  CHECK(run.iterates.size() - 1 <= m.num_states() + 1);
  for (std::size_t i = 1; i < run.iterates.size(); ++i)
    CHECK(run.iterates[i - 1].is_subset_of(run.iterates[i]));

  EvalStats gstats;
  sat(m, *ctl::ag(ctl::ef(q())), &gstats);
  REQUIRE(gstats.runs.size() == 2);
  CHECK(gstats.runs[0].least);       // inner EF first
  CHECK(!gstats.runs[1].least);      // outer AG
  const FixpointRun& grun = gstats.runs[1];
  for (std::size_t i = 1; i < grun.iterates.size(); ++i)
    CHECK(grun.iterates[i].is_subset_of(grun.iterates[i - 1]));
}

TEST_CASE("witness traces for existential verdicts") {
  const StateModel m = until_triptych();

  SUBCASE("EX steps once") {
    const CheckResult res = check(m, ctl::ex(q()));
    REQUIRE(res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(res.trace->kind == Trace::Kind::Witness);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 1});
    CHECK(res.trace->path[0].fired == "ab");
    CHECK(!res.trace->loop_back);
  }
  SUBCASE("EF at a satisfying initial state is length zero") {
    const CheckResult res = check(m, ctl::ef(q()));
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0});
    CHECK(!res.trace->path[0].fired);
  }
  SUBCASE("EF reaches the nearest satisfying state") {
    const CheckResult res = check(m, ctl::ef(ctl::deadlock()));
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 2});
    CHECK(res.trace->path[0].fired == "ac");
  }
  SUBCASE("EU walks through f-states into the goal") {
    const CheckResult res = check(m, ctl::eu(q(), r()));
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("EW may witness an infinite q-path as a lasso") {
    StateModel no_r = make_model({PlaceId{"", "q"}}, {{0}, {0}}, {{0, "a", 1}, {1, "b", 1}}, 0);
    const CheckResult res = check(no_r, ctl::ew(q(), ctl::atom("", "q")));
    REQUIRE(res.holds_at_initial);  // q at the initial state: stops immediately
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0});

    const CheckResult loop = check(no_r, ctl::ew(q(), ctl::neg(q())));
    REQUIRE(loop.holds_at_initial);
    REQUIRE(loop.trace);
    REQUIRE(loop.trace->loop_back);
    CHECK(trace_states(*loop.trace) == std::vector<std::size_t>{0, 1});
    CHECK(*loop.trace->loop_back == 1);
    CHECK(loop.trace->path[1].fired == "b");
  }
  SUBCASE("failing existential formulas carry no trace") {
    const CheckResult res = check(m, ctl::eu(r(), ctl::conj(q(), r())));
    CHECK(!res.holds_at_initial);
    CHECK(!res.trace);
  }
}

TEST_CASE("counterexample traces for failed universal verdicts") {
  const StateModel m = until_triptych();

  SUBCASE("AU fails via the lasso that avoids r") {
    const CheckResult res = check(m, ctl::au(q(), r()));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(res.trace->kind == Trace::Kind::Counterexample);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 1});
    REQUIRE(res.trace->loop_back);
    CHECK(*res.trace->loop_back == 1);
    CHECK(res.trace->path[0].fired == "ab");
    CHECK(res.trace->path[1].fired == "bb");
  }
  SUBCASE("AU fails finitely when f breaks first") {
    const CheckResult res = check(m, ctl::au(r(), ctl::conj(q(), r())));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0});
    CHECK(!res.trace->loop_back);
  }
  SUBCASE("AU fails finitely at a dead-end that never reaches g") {
    const CheckResult res = check(m, ctl::au(ctl::disj(q(), r()), ctl::conj(q(), r())));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    REQUIRE(!res.trace->loop_back);
    CHECK(trace_states(*res.trace).back() == 2);
  }
  SUBCASE("AX steps to the offending successor") {
    const CheckResult res = check(m, ctl::ax(r()));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 1});
    CHECK(res.trace->path[0].fired == "ab");
  }
  SUBCASE("AG reaches the nearest violation") {
    const CheckResult res = check(m, ctl::ag(q()));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("AW violations are finite prefixes") {
    const CheckResult res = check(m, ctl::aw(r(), ctl::conj(q(), r())));
    REQUIRE(!res.holds_at_initial);
    REQUIRE(res.trace);
    CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0});
    CHECK(!res.trace->loop_back);
  }
  SUBCASE("holding universal formulas carry no trace") {
    CHECK(!check(m, ctl::aw(q(), r())).trace);
  }
}

TEST_CASE("self-loop lasso points back at its own step") {
  // One state with a self-loop and no r anywhere.
  StateModel m = make_model({PlaceId{"", "q"}}, {{0}}, {{0, "loop", 0}}, 0);
  const CheckResult res = check(m, ctl::au(q(), ctl::neg(q())));
  REQUIRE(!res.holds_at_initial);
  REQUIRE(res.trace);
  CHECK(trace_states(*res.trace) == std::vector<std::size_t>{0});
  REQUIRE(res.trace->loop_back);
  CHECK(*res.trace->loop_back == 0);
  CHECK(res.trace->path[0].fired == "loop");
}

TEST_CASE("oracle refuses oversized models and matches sat elsewhere") {
  std::vector<std::vector<std::size_t>> states(13);
  StateModel big = make_model({PlaceId{"", "p"}}, states, {}, 0);
  CHECK_THROWS_AS(oracle_sat(big, *ctl::deadlock()), OracleBoundError);
  CHECK(oracle_sat(big, *ctl::deadlock(), 13).count() == 13);

  const StateModel one = make_model({PlaceId{"", "p"}}, {{}}, {}, 0);
  CHECK(oracle_sat(one, *ctl::ex(ctl::atom("", "p"))) == StateSet(1));
  CHECK(oracle_sat(one, *ctl::ax(ctl::atom("", "p"))).test(0));
}

TEST_CASE("sat and oracle_sat agree on random models") {
  std::mt19937 rng(404142);
  for (int mi = 0; mi < 120; ++mi) {
    const StateModel m = testgen::random_model(rng);
    for (int fi = 0; fi < 8; ++fi) {
      const FormulaPtr f = testgen::random_formula(rng, 4, m.atoms);
      CAPTURE(render_formula(*f));
      CHECK(sat(m, *f) == oracle_sat(m, *f));
    }
  }
}

TEST_CASE("semantic laws hold on random models") {
  std::mt19937 rng(515253);
  for (int mi = 0; mi < 60; ++mi) {
    const StateModel m = testgen::random_model(rng);
    const FormulaPtr f = testgen::random_formula(rng, 2, m.atoms);
    const FormulaPtr g = testgen::random_formula(rng, 2, m.atoms);
    CHECK(sat(m, *ctl::ax(f)) == sat(m, *ctl::neg(ctl::ex(ctl::neg(f)))));
    CHECK(sat(m, *ctl::ag(f)) == sat(m, *ctl::neg(ctl::ef(ctl::neg(f)))));
    CHECK(sat(m, *ctl::au(f, g)).is_subset_of(sat(m, *ctl::aw(f, g))));
    CHECK(sat(m, *ctl::eu(f, g)).is_subset_of(sat(m, *ctl::ew(f, g))));
  }
}
