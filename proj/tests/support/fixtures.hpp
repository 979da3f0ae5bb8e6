#pragma once

// Automata shared by the unit tests and the acceptance suite.

#include <string>

#include "ecta/nodes.hpp"

namespace testsupport {

// root accepts plus(f(t), f(t)) for t in {a, b, c}; its skeleton accepts all
// nine combinations
struct SharedArg {
  ecta::NodeId leaves;  // {a, b, c}
  ecta::NodeId wrapped; // {f(leaves)}
  ecta::NodeId root;    // {plus(wrapped, wrapped) where 0.0 = 1.0}
};

inline SharedArg build_shared_arg(ecta::NodeStore& s) {
  using namespace ecta;
  SymbolTable& sy = s.symbols();
  SharedArg r;
  r.leaves = s.mk_node({*s.mk_edge(sy.intern("a", 0), {}, {}),
                        *s.mk_edge(sy.intern("b", 0), {}, {}),
                        *s.mk_edge(sy.intern("c", 0), {}, {})});
  r.wrapped = s.mk_node({*s.mk_edge(sy.intern("f", 1), {r.leaves}, {})});
  r.root = s.mk_node({*s.mk_edge(sy.intern("plus", 2), {r.wrapped, r.wrapped},
                                 Pcs{{Pec{{Path{0, 0}, Path{1, 0}}}}})});
  return r;
}

// one-step application space over x:Int, y:Char, f:Bool->Bool, g:Int->Bool,
// h:Char->Int; the constraint matches argument type to parameter type
struct TypedApp {
  ecta::NodeId t_int, t_char, t_bool;
  ecta::NodeId scalars;  // {x(Int), y(Char)}
  ecta::NodeId unaries;  // {f(Bool,Bool), g(Int,Bool), h(Char,Int)}, children [arg, ret]
  ecta::NodeId root;     // {app(unaries, scalars) where 0.0 = 1.0}
};

inline TypedApp build_typed_app(ecta::NodeStore& s) {
  using namespace ecta;
  SymbolTable& sy = s.symbols();
  TypedApp r;
  r.t_int = s.mk_node({*s.mk_edge(sy.intern("Int", 0), {}, {})});
  r.t_char = s.mk_node({*s.mk_edge(sy.intern("Char", 0), {}, {})});
  r.t_bool = s.mk_node({*s.mk_edge(sy.intern("Bool", 0), {}, {})});
  r.scalars = s.mk_node({*s.mk_edge(sy.intern("x", 1), {r.t_int}, {}),
                         *s.mk_edge(sy.intern("y", 1), {r.t_char}, {})});
  r.unaries = s.mk_node({*s.mk_edge(sy.intern("f", 2), {r.t_bool, r.t_bool}, {}),
                         *s.mk_edge(sy.intern("g", 2), {r.t_int, r.t_bool}, {}),
                         *s.mk_edge(sy.intern("h", 2), {r.t_char, r.t_int}, {})});
  r.root = s.mk_node({*s.mk_edge(sy.intern("app", 2), {r.unaries, r.scalars},
                                 Pcs{{Pec{{Path{0, 0}, Path{1, 0}}}}})});
  return r;
}

// the same space wrapped in a query for result type Bool; application nodes
// carry their result type as child 0 so the query can constrain it
struct TypedQuery {
  ecta::NodeId any_ty;  // {Bool, Int, Char}
  ecta::NodeId root;    // query(goal, app3(ty, unaries, scalars))
};

inline TypedQuery build_typed_query(ecta::NodeStore& s) {
  using namespace ecta;
  SymbolTable& sy = s.symbols();
  TypedApp base = build_typed_app(s);
  TypedQuery r;
  r.any_ty = s.mk_node({*s.mk_edge(sy.intern("Bool", 0), {}, {}),
                        *s.mk_edge(sy.intern("Int", 0), {}, {}),
                        *s.mk_edge(sy.intern("Char", 0), {}, {})});
  NodeId apps = s.mk_node(
      {*s.mk_edge(sy.intern("app3", 3), {r.any_ty, base.unaries, base.scalars},
                  Pcs{{Pec{{Path{0}, Path{1, 1}}}, Pec{{Path{1, 0}, Path{2, 0}}}}})});
  NodeId goal = s.mk_node({*s.mk_edge(sy.intern("Bool", 0), {}, {})});
  r.root = s.mk_node({*s.mk_edge(sy.intern("query", 2), {goal, apps},
                                 Pcs{{Pec{{Path{0}, Path{1, 0}}}}})});
  return r;
}

// perfect binary tree of t's with every level's two subtrees forced equal;
// two leaf choices at the bottom
inline ecta::NodeId build_equal_tree(ecta::NodeStore& s, uint32_t depth) {
  using namespace ecta;
  SymbolTable& sy = s.symbols();
  NodeId cur = s.mk_node({*s.mk_edge(sy.intern("x", 0), {}, {}),
                          *s.mk_edge(sy.intern("y", 0), {}, {})});
  SymbolId t = sy.intern("t", 2);
  for (uint32_t i = 0; i < depth; ++i) {
    cur = s.mk_node({*s.mk_edge(t, {cur, cur}, Pcs{{Pec{{Path{0}, Path{1}}}}})});
  }
  return cur;
}

inline const char* prelude_library() {
  return R"(fromMaybe        :: a -> Maybe a -> a
listToMaybe      :: [a] -> Maybe a
maybeToList      :: Maybe a -> [a]
catMaybes        :: [Maybe a] -> [a]
isJust           :: Maybe a -> Bool
isNothing        :: Maybe a -> Bool
just             :: a -> Maybe a
head             :: [a] -> a
last             :: [a] -> a
tail             :: [a] -> [a]
init             :: [a] -> [a]
null             :: [a] -> Bool
length           :: [a] -> Int
reverse          :: [a] -> [a]
concat           :: [[a]] -> [a]
cons             :: a -> [a] -> [a]
append           :: [a] -> [a] -> [a]
lookup           :: a -> [Pair a b] -> Maybe b
fst              :: Pair a b -> a
snd              :: Pair a b -> b
pair             :: a -> b -> Pair a b
swap             :: Pair a b -> Pair b a
zip              :: [a] -> [b] -> [Pair a b]
unzip            :: [Pair a b] -> Pair [a] [b]
either           :: (a -> c) -> (b -> c) -> Either a b -> c
left             :: a -> Either a b
right            :: b -> Either a b
lefts            :: [Either a b] -> [a]
rights           :: [Either a b] -> [b]
partitionEithers :: [Either a b] -> Pair [a] [b]
not              :: Bool -> Bool
and              :: [Bool] -> Bool
or               :: [Bool] -> Bool
elem             :: a -> [a] -> Bool
nub              :: [a] -> [a]
take             :: Int -> [a] -> [a]
drop             :: Int -> [a] -> [a]
replicate        :: Int -> a -> [a]
words            :: String -> [String]
unwords          :: [String] -> String
)";
}

}  // namespace testsupport
