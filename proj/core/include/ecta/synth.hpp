#pragma once

// Type-driven component synthesis. Component types become transitions whose
// child encodes the type structurally; type variables point at a recursive
// node covering every constructor, with equality classes tying repeated
// variables together. Sized term spaces stack application transitions whose
// constraints perform unification, so enumeration emits well-typed terms.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ecta/enumerate.hpp"
#include "ecta/nodes.hpp"
#include "ecta/reduce.hpp"

namespace ecta {

struct TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

struct TypeExpr {
  enum class Kind : uint8_t { Con, Var, Arrow };
  Kind kind;
  std::string name;           // Con, Var
  std::vector<TypePtr> args;  // Con arguments; Arrow stores {in, out}

  static TypePtr con(std::string name, std::vector<TypePtr> args = {});
  static TypePtr var(std::string name);
  static TypePtr arrow(TypePtr in, TypePtr out);
};

// Haskell-like syntax: right-associative ->, constructor application by
// juxtaposition, [t] for List t, (a, b) for Pair a b, lowercase names as
// type variables. A "C a =>" context is parsed and dropped.
TypePtr parse_type(const std::string& text);  // throws std::runtime_error
std::string type_to_string(const TypePtr& t);
bool type_equal(const TypePtr& a, const TypePtr& b);

struct Component {
  std::string name;
  TypePtr scheme;
};

// One "name :: type" per line; "--" starts a comment.
std::vector<Component> parse_library(const std::string& text);

struct SynthesisProblem {
  std::vector<Component> library;
  TypePtr query;
  // Names for the query's arrow-spine parameters; generated as arg0.. when
  // fewer names than parameters are given.
  std::vector<std::string> input_names;
  uint32_t max_size = 6;
};

struct Candidate {
  std::string term;
  uint32_t size;
};

struct SynthOptions {
  bool relevancy = true;
  int reduce_rounds = 30;
  bool naive = false;           // rejection-sampling baseline
  uint64_t naive_budget = 1000000;  // candidate cap for the baseline
  uint64_t max_per_size = 4096;     // enumeration states per size
  Schedule schedule = Schedule::DfsLR;
  bool audit = false;
};

struct SynthStats {
  uint64_t states_explored = 0;
  uint64_t dead_branches = 0;
  uint64_t enum_steps = 0;
  long edges_removed = 0;
  bool budget_exhausted = false;  // baseline hit its candidate cap
};

struct SynthResult {
  std::vector<Candidate> candidates;
  SynthStats stats;
};

// Yields candidates size by size; the sink may return false to stop.
SynthResult synthesize(NodeStore& s, const SynthesisProblem& p, const SynthOptions& opts = {},
                       const std::function<bool(const Candidate&)>& sink = nullptr);

// Building blocks, exposed for inspection and tests.

// Constructor universe of a problem: every constructor mentioned in the
// library plus the query's skolemized type variables.
struct TypeUniverse {
  std::map<std::string, uint32_t> constructors;  // name -> arity
};
TypeUniverse collect_universe(const SynthesisProblem& p);

NodeId build_any_node(NodeStore& s, const TypeUniverse& u);
NodeId tag_witness_node(NodeStore& s);

// Replaces type variables by same-named nullary constructors.
TypePtr skolemize(const TypePtr& t);

// Structural type node; type variables map to `any` and their positions are
// collected into `occurrences`.
NodeId encode_type(NodeStore& s, const TypePtr& t, NodeId any,
                   std::map<std::string, std::vector<Path>>* occurrences = nullptr);

std::optional<Edge> encode_component(NodeStore& s, const Component& c, NodeId any);

struct TermSpace {
  NodeId any = kBottom;
  std::vector<Edge> leaf_edges;  // components then inputs
  uint32_t num_inputs = 0;
  bool relevancy = true;
  std::map<uint64_t, NodeId> memo;  // (size, input mask) -> node

  NodeId node(NodeStore& s, uint32_t size, uint32_t mask);
};

TermSpace make_term_space(NodeStore& s, const SynthesisProblem& p, bool relevancy);

NodeId attach_query(NodeStore& s, NodeId space, NodeId query_type);

// Reads the application term out of a fully enumerated state, dropping type
// and tag children: "fromMaybe def (listToMaybe (catMaybes mbs))".
std::string pretty_term(NodeStore& s, const EnumState& st);

// Unification-based checker used by the baseline's rejection filter and the
// relevancy cross-checks. Term syntax: names and parenthesized applications.
bool check_candidate(const std::string& term, const SynthesisProblem& p);

}  // namespace ecta
