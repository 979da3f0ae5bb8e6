#include <doctest.h>

#include <random>

#include "ecta/sat.hpp"
#include "support/oracles.hpp"
#include <stdexcept>

using namespace ecta;

namespace {

SatOptions all_audited() {
  SatOptions o;
  o.all = true;
  o.audit = true;
  return o;
}

}  // namespace

TEST_SUITE("sat") {

TEST_CASE("dimacs parsing") {
  Cnf cnf = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3 0\n");
  CHECK(cnf.num_vars == 3);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.clauses[0] == std::vector<int>{1, -2});
  CHECK(cnf.clauses[1] == std::vector<int>{2, 3});
  CHECK(parse_dimacs(cnf_to_dimacs(cnf)).clauses == cnf.clauses);

  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), std::runtime_error);  // out of range
  CHECK_THROWS_AS(parse_dimacs("1 0\n"), std::runtime_error);             // missing header
}

TEST_CASE("exclusive pair has exactly its two models") {
  SymbolTable sy;
  NodeStore s(sy);
  Cnf cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  SatResult res = sat_solve(s, cnf, all_audited());
  CHECK(res.sat);
  CHECK(res.full_model_count == 2);
  auto got = testsupport::expand_models(res.models, cnf.num_vars);
  CHECK(got == std::set<uint32_t>{0b01, 0b10});
}

TEST_CASE("conflicts die before the assignment completes") {
  SymbolTable sy;
  NodeStore s(sy);
  Cnf cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  SatResult res = sat_solve(s, cnf, all_audited());
  // choosing a=T then meeting the second clause must refine, not enumerate b
  CHECK(res.stats.dead_branches > 0);
}

TEST_CASE("unconstrained variables come back as wildcards") {
  SymbolTable sy;
  NodeStore s(sy);
  Cnf cnf = parse_dimacs("p cnf 3 1\n1 0\n");
  SatResult res = sat_solve(s, cnf, all_audited());
  REQUIRE(res.sat);
  REQUIRE(res.models.size() == 1);
  CHECK(res.models[0].vals[0] == TruthVal::True);
  CHECK(res.models[0].vals[1] == TruthVal::Star);
  CHECK(res.models[0].vals[2] == TruthVal::Star);
  CHECK(res.full_model_count == 4);
  CHECK(model_to_string(res.models[0]) == "v 1 *2 *3 0");
}

TEST_CASE("unsatisfiable instances") {
  SymbolTable sy;
  NodeStore s(sy);
  CHECK(!sat_solve(s, parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"), all_audited()).sat);
  // empty clause
  CHECK(!sat_solve(s, Cnf{1, {{}}}, all_audited()).sat);
}

TEST_CASE("first-model mode stops early") {
  SymbolTable sy;
  NodeStore s(sy);
  Cnf cnf = parse_dimacs("p cnf 2 1\n1 2 0\n");
  SatOptions first;
  first.audit = true;
  SatResult res = sat_solve(s, cnf, first);
  CHECK(res.sat);
  CHECK(res.models.size() == 1);
}

TEST_CASE("static reduction keeps the answer") {
  SymbolTable sy;
  NodeStore s(sy);
  Cnf cnf = parse_dimacs("p cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n");
  SatOptions with_reduce = all_audited();
  with_reduce.reduce_rounds = 10;
  SymbolTable sy2;
  NodeStore s2(sy2);
  auto plain = sat_solve(s2, cnf, all_audited());
  auto reduced = sat_solve(s, cnf, with_reduce);
  CHECK(plain.sat == reduced.sat);
  CHECK(testsupport::expand_models(plain.models, cnf.num_vars) ==
        testsupport::expand_models(reduced.models, cnf.num_vars));
}

TEST_CASE("random instances match the truth table") {
  std::mt19937_64 rng(0x5A7);
  for (int i = 0; i < 60; ++i) {
    Cnf cnf = testsupport::random_cnf(rng, 8, 10);
    auto want = testsupport::truth_table_models(cnf);
    SymbolTable sy;
    NodeStore s(sy);
    SatResult res = sat_solve(s, cnf, all_audited());
    CHECK(res.sat == !want.empty());
    CHECK(testsupport::expand_models(res.models, cnf.num_vars) == want);
    CHECK(res.full_model_count == want.size());
  }
}

}  // TEST_SUITE
