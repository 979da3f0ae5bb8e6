#include <doctest.h>

#include "ecta/egraph.hpp"

using namespace ecta;

namespace {

Pcs mk(std::vector<Pec> classes) { return pcs_normalize(std::move(classes)); }

}  // namespace

TEST_SUITE("egraph") {

TEST_CASE("crossing equalities force a cycle") {
  // 0 = 1.0 together with 0.0 = 1 makes 0 contain itself
  Pcs bad = mk({Pec({Path{0}, Path{1, 0}}), Pec({Path{0, 0}, Path{1}})});
  CHECK(!pcs_consistent(bad));
}

TEST_CASE("sibling subterm equality is fine") {
  Pcs good = mk({Pec({Path{0, 0}, Path{1, 0}})});
  CHECK(pcs_consistent(good));
}

TEST_CASE("a path equal to its own prefix is impossible") {
  CHECK(!pcs_consistent(mk({Pec({Path{}, Path{0}})})));
  CHECK(!pcs_consistent(mk({Pec({Path{0}, Path{0, 1}})})));
}

TEST_CASE("congruence: equal parents give equal children") {
  PathEGraph g(mk({Pec({Path{0}, Path{1}})}));
  REQUIRE(g.consistent());
  CHECK(g.same_class(Path{0}, Path{1}));
  CHECK(g.same_class(Path{0, 2}, Path{1, 2}));
  CHECK(g.same_class(Path{0, 2, 0}, Path{1, 2, 0}));
  CHECK(!g.same_class(Path{0, 1}, Path{1, 2}));
}

TEST_CASE("transitive merge across classes") {
  PathEGraph g(mk({Pec({Path{0}, Path{1}}), Pec({Path{1}, Path{2}})}));
  REQUIRE(g.consistent());
  CHECK(g.same_class(Path{0}, Path{2}));
}

TEST_CASE("deep congruence chain stays consistent") {
  // 0 = 1 and 0.0 = 2: consistent, and 1.0 lands with 2
  PathEGraph g(mk({Pec({Path{0}, Path{1}}), Pec({Path{0, 0}, Path{2}})}));
  REQUIRE(g.consistent());
  CHECK(g.same_class(Path{1, 0}, Path{2}));
}

TEST_CASE("restricted classes drop singletons and resort") {
  PathEGraph g(mk({Pec({Path{0}, Path{1}})}));
  Pcs back = g.restricted_classes();
  REQUIRE(back.size() == 1);
  CHECK(back.classes[0] == Pec({Path{0}, Path{1}}));
}

TEST_CASE("inconsistency via congruence closure only") {
  // 0 = 1 forces 0.0 = 1.0; adding 1.0 = 0 closes a cycle through 0
  Pcs bad = mk({Pec({Path{0}, Path{1}}), Pec({Path{1, 0}, Path{0}})});
  CHECK(!pcs_consistent(bad));
}

TEST_CASE("empty set is consistent") {
  CHECK(pcs_consistent(Pcs{}));
}

}  // TEST_SUITE
