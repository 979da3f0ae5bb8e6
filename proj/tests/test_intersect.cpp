#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ecta/nodes.hpp"
#include "ecta/random.hpp"
#include "support/fixtures.hpp"

using namespace ecta;

namespace {

std::set<TermId> denote_set(NodeStore& s, TermStore& ts, NodeId n, uint32_t d) {
  auto v = denote_bounded(s, ts, n, d);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("intersect") {

TEST_CASE("identities") {
  SymbolTable sy;
  NodeStore s(sy);
  NodeId a = s.mk_node({*s.mk_edge(sy.intern("a", 0), {}, {})});
  CHECK(intersect(s, a, a) == a);
  CHECK(intersect(s, a, kBottom) == kBottom);
  CHECK(intersect(s, kBottom, a) == kBottom);
}

TEST_CASE("disjoint symbols meet at bottom") {
  SymbolTable sy;
  NodeStore s(sy);
  NodeId a = s.mk_node({*s.mk_edge(sy.intern("a", 0), {}, {})});
  NodeId b = s.mk_node({*s.mk_edge(sy.intern("b", 0), {}, {})});
  CHECK(intersect(s, a, b) == kBottom);
}

TEST_CASE("overlapping alternatives keep the common ones") {
  SymbolTable sy;
  NodeStore s(sy);
  Edge a = *s.mk_edge(sy.intern("a", 0), {}, {});
  Edge b = *s.mk_edge(sy.intern("b", 0), {}, {});
  Edge c = *s.mk_edge(sy.intern("c", 0), {}, {});
  NodeId ab = s.mk_node({a, b});
  NodeId bc = s.mk_node({b, c});
  NodeId only_b = s.mk_node({b});
  CHECK(intersect(s, ab, bc) == only_b);
}

TEST_CASE("constraints conjoin") {
  SymbolTable sy;
  NodeStore s(sy);
  NodeId ab = s.mk_node({*s.mk_edge(sy.intern("a", 0), {}, {}),
                         *s.mk_edge(sy.intern("b", 0), {}, {})});
  SymbolId t = sy.intern("t", 2);
  NodeId free2 = s.mk_node({*s.mk_edge(t, {ab, ab}, {})});
  NodeId eq2 = s.mk_node({*s.mk_edge(t, {ab, ab}, pcs_normalize({Pec({Path{0}, Path{1}})}))});
  TermStore ts(sy);
  CHECK(denote_set(s, ts, free2, 2).size() == 4);
  CHECK(intersect(s, free2, eq2) == eq2);
  CHECK(denote_set(s, ts, intersect(s, free2, eq2), 2).size() == 2);
}

TEST_CASE("meet of distinct equalities forces all equal") {
  SymbolTable sy;
  NodeStore s(sy);
  NodeId ab = s.mk_node({*s.mk_edge(sy.intern("a", 0), {}, {}),
                         *s.mk_edge(sy.intern("b", 0), {}, {})});
  SymbolId t = sy.intern("t", 3);
  NodeId eq01 = s.mk_node({*s.mk_edge(t, {ab, ab, ab}, pcs_normalize({Pec({Path{0}, Path{1}})}))});
  NodeId eq12 = s.mk_node({*s.mk_edge(t, {ab, ab, ab}, pcs_normalize({Pec({Path{1}, Path{2}})}))});
  NodeId both = intersect(s, eq01, eq12);
  TermStore ts(sy);
  auto got = denote_set(s, ts, both, 2);
  CHECK(got.size() == 2);  // t(a,a,a) and t(b,b,b)
}

TEST_CASE("recursive loops meet at the common multiple") {
  SymbolTable sy;
  NodeStore s(sy);
  SymbolId f = sy.intern("f", 1);
  SymbolId a = sy.intern("a", 0);
  // every f-tower over a, and every even tower
  NodeId any = s.mk_mu(s.mk_node({*s.mk_edge(f, {s.mk_var(0)}, {}), *s.mk_edge(a, {}, {})}));
  NodeId inner = s.mk_node({*s.mk_edge(f, {s.mk_var(0)}, {})});
  NodeId even = s.mk_mu(
      s.mk_node({*s.mk_edge(f, {s.mk_node({*s.mk_edge(f, {s.mk_var(0)}, {})})}, {}),
                 *s.mk_edge(a, {}, {})}));
  (void)inner;
  NodeId met = intersect(s, any, even);
  TermStore ts(sy);
  CHECK(denote_set(s, ts, met, 7) == denote_set(s, ts, even, 7));

  // two-cycle against three-cycle accepts towers divisible by six
  NodeId two = even;
  NodeId three = s.mk_mu(s.mk_node(
      {*s.mk_edge(
           f,
           {s.mk_node({*s.mk_edge(
               f, {s.mk_node({*s.mk_edge(f, {s.mk_var(0)}, {})})}, {})})},
           {}),
       *s.mk_edge(a, {}, {})}));
  NodeId six = intersect(s, two, three);
  std::set<TermId> expect;
  TermId cur = ts.mk(sy.intern("a", 0), {});
  expect.insert(cur);
  for (int i = 0; i < 6; ++i) cur = ts.mk(f, {cur});
  expect.insert(cur);
  CHECK(denote_set(s, ts, six, 8) == expect);
}

TEST_CASE("meet agrees with denotation intersection on random inputs") {
  std::mt19937_64 rng(0x15EC);
  for (int i = 0; i < 80; ++i) {
    SymbolTable sy;
    NodeStore s(sy);
    TermStore ts(sy);
    NodeId a = random_acyclic_ecta(s, rng);
    NodeId b = random_acyclic_ecta(s, rng);
    uint32_t d = std::max(lasso_height(s, a), lasso_height(s, b));
    auto da = denote_set(s, ts, a, d);
    auto db = denote_set(s, ts, b, d);
    std::set<TermId> want;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                          std::inserter(want, want.end()));
    CHECK(denote_set(s, ts, intersect(s, a, b), d) == want);
  }
}

}  // TEST_SUITE
