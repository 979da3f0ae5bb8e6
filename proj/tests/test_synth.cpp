#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "ecta/synth.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include <stdexcept>

using namespace ecta;

namespace {

SynthOptions audited() {
  SynthOptions o;
  o.audit = true;
  return o;
}

std::set<std::string> candidate_set(const SynthResult& r) {
  std::set<std::string> out;
  for (const Candidate& c : r.candidates) out.insert(c.term);
  return out;
}

}  // namespace

TEST_SUITE("synth") {

TEST_CASE("type parsing") {
  CHECK(type_to_string(parse_type("a -> [Maybe a] -> a")) == "a -> [Maybe a] -> a");
  // Pair prints in tuple sugar
  CHECK(type_to_string(parse_type("(a -> b) -> Pair a b")) == "(a -> b) -> (a, b)");
  CHECK(type_equal(parse_type("Pair a b"), parse_type("(a, b)")));
  CHECK(type_to_string(parse_type("[ [ Int ] ]")) == "[[Int]]");
  CHECK(type_to_string(parse_type("(Int, Char)")) == "(Int, Char)");
  CHECK(type_to_string(parse_type("Eq a => a -> [a] -> Bool")) == "a -> [a] -> Bool");
  CHECK(parse_type("Maybe a")->kind == TypeExpr::Kind::Con);
  CHECK(parse_type("a")->kind == TypeExpr::Kind::Var);
  CHECK(type_equal(parse_type("a->b"), parse_type("a -> b")));
  CHECK(!type_equal(parse_type("a -> b"), parse_type("b -> a")));
  CHECK_THROWS_AS(parse_type("m a"), std::runtime_error);  // no higher-kinded variables
  CHECK_THROWS_AS(parse_type("Maybe ("), std::runtime_error);
  CHECK_THROWS_AS(parse_type(""), std::runtime_error);
}

TEST_CASE("library parsing") {
  auto lib = parse_library("f :: a -> b -- arrow\n\ng :: Int\n");
  REQUIRE(lib.size() == 2);
  CHECK(lib[0].name == "f");
  CHECK(lib[1].name == "g");
  CHECK(type_to_string(lib[1].scheme) == "Int");
  CHECK_THROWS_AS(parse_library("f :: a\nf :: b\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_library("junk line\n"), std::runtime_error);
}

TEST_CASE("monomorphic application space") {
  // same shape as the worked one-step example: two scalars, three unaries
  SynthesisProblem p;
  p.library = parse_library(
      "x :: Int\ny :: Char\nf :: Bool -> Bool\ng :: Int -> Bool\nh :: Char -> Int\n");
  p.query = parse_type("Bool");
  p.max_size = 2;
  SymbolTable sy;
  NodeStore s(sy);
  SynthOptions o = audited();
  o.relevancy = false;  // no query arguments to require
  auto res = synthesize(s, p, o);
  CHECK(candidate_set(res) == std::set<std::string>{"g x"});

  SymbolTable sy2;
  NodeStore s2(sy2);
  p.query = parse_type("Int");
  auto res2 = synthesize(s2, p, o);
  CHECK(candidate_set(res2) == std::set<std::string>{"x", "h y"});
}

TEST_CASE("polymorphic components instantiate per use") {
  SynthesisProblem p;
  p.library = parse_library("x :: Int\ny :: Char\ng :: a -> a\nh :: Char -> Bool\n");
  p.query = parse_type("Int");
  p.max_size = 2;
  SymbolTable sy;
  NodeStore s(sy);
  SynthOptions o = audited();
  o.relevancy = false;
  auto res = synthesize(s, p, o);
  CHECK(candidate_set(res) == std::set<std::string>{"x", "g x"});
}

TEST_CASE("only genuine functions apply") {
  // a non-arrow with arrow-shaped pieces must not be applied: pairs hold an
  // element of each type but offer no application
  SynthesisProblem p;
  p.library = parse_library("pr :: Pair Int Bool\nx :: Int\n");
  p.query = parse_type("Bool");
  p.max_size = 2;
  SymbolTable sy;
  NodeStore s(sy);
  SynthOptions o = audited();
  o.relevancy = false;
  auto res = synthesize(s, p, o);
  CHECK(res.candidates.empty());
}

TEST_CASE("relevancy requires every input") {
  SynthesisProblem p;
  p.library = parse_library("zero :: Int\n");
  p.query = parse_type("Int -> Int");
  p.input_names = {"n"};
  p.max_size = 1;
  SymbolTable sy;
  NodeStore s(sy);
  auto res = synthesize(s, p, audited());
  CHECK(candidate_set(res) == std::set<std::string>{"n"});  // zero ignores n

  SymbolTable sy2;
  NodeStore s2(sy2);
  SynthOptions loose = audited();
  loose.relevancy = false;
  auto res2 = synthesize(s2, p, loose);
  CHECK(candidate_set(res2) == std::set<std::string>{"n", "zero"});
}

TEST_CASE("the prelude query finds the catMaybes chain") {
  SynthesisProblem p;
  p.library = parse_library(testsupport::prelude_library());
  p.query = parse_type("a -> [Maybe a] -> a");
  p.input_names = {"def", "mbs"};
  p.max_size = 5;
  SymbolTable sy;
  NodeStore s(sy);
  auto res = synthesize(s, p, audited());
  auto got = candidate_set(res);
  CHECK(got.count("fromMaybe def (listToMaybe (catMaybes mbs))") == 1);
  // every candidate type checks under the reference checker and the internal one
  for (const Candidate& c : res.candidates) {
    CAPTURE(c.term);
    CHECK(check_candidate(c.term, p));
    CHECK(testsupport::oracle_type_checks(c.term, p));
  }
}

TEST_CASE("internal checker rejects garbage") {
  SynthesisProblem p;
  p.library = parse_library(testsupport::prelude_library());
  p.query = parse_type("a -> [Maybe a] -> a");
  p.input_names = {"def", "mbs"};
  CHECK(!check_candidate("fromMaybe mbs def", p));
  CHECK(!check_candidate("catMaybes def", p));
  CHECK(!check_candidate("unknownName", p));
  CHECK(!check_candidate("fromMaybe def (listToMaybe mbs)", p));  // [Maybe a] is not [a]
  CHECK(check_candidate("fromMaybe def (listToMaybe (catMaybes mbs))", p));
  CHECK(!testsupport::oracle_type_checks("fromMaybe mbs def", p));
  CHECK(!testsupport::oracle_type_checks("fromMaybe def (listToMaybe mbs)", p));
  CHECK(testsupport::oracle_type_checks("fromMaybe def (listToMaybe (catMaybes mbs))", p));
}

TEST_CASE("naive baseline agrees on a small library") {
  SynthesisProblem p;
  p.library = parse_library("fromMaybe :: a -> Maybe a -> a\nlistToMaybe :: [a] -> Maybe a\n");
  p.query = parse_type("a -> [a] -> a");
  p.input_names = {"d", "xs"};
  p.max_size = 4;
  SymbolTable sy;
  NodeStore s(sy);
  auto fast = synthesize(s, p, audited());
  SynthOptions nv = audited();
  nv.naive = true;
  SymbolTable sy2;
  NodeStore s2(sy2);
  auto slow = synthesize(s2, p, nv);
  CHECK(!slow.stats.budget_exhausted);
  CHECK(candidate_set(fast) == candidate_set(slow));
  CHECK(candidate_set(fast).count("fromMaybe d (listToMaybe xs)") == 1);
}

TEST_CASE("schedules explore the same language") {
  SynthesisProblem p;
  p.library = parse_library("x :: Int\ns :: Int -> Int\n");
  p.query = parse_type("Int");
  p.max_size = 3;
  SynthOptions lr = audited();
  lr.relevancy = false;
  SynthOptions rl = lr;
  rl.schedule = Schedule::DfsRL;
  SymbolTable sy;
  NodeStore s(sy);
  SymbolTable sy2;
  NodeStore s2(sy2);
  CHECK(candidate_set(synthesize(s, p, lr)) == candidate_set(synthesize(s2, p, rl)));
}

}  // TEST_SUITE
