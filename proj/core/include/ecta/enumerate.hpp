#pragma once

// Constraint-directed enumeration. Instead of grounding terms, enumeration
// walks the automaton symbolically: positions that must be equal share a
// variable, and each variable's possibilities stay compact as an automaton
// node until a constraint forces a choice. A fully-enumerated state is a
// hierarchy of unconstrained nodes; expansion grounds it to terms.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecta/nodes.hpp"

namespace ecta {

using VarId = uint32_t;
inline constexpr VarId kTopVar = 0;

// One remembered constraint piece: the subterms at these paths (relative to
// the node carrying the fragment) must all equal the variable's value. The
// root path appears only as a fragment's sole path.
struct Fragment {
  Pec paths;
  VarId var;

  bool operator==(const Fragment&) const = default;
  bool operator<(const Fragment& o) const {
    if (!(paths == o.paths)) return paths < o.paths;
    return var < o.var;
  }
  bool is_eps() const { return paths.size() == 1 && paths.paths[0].empty(); }
};

struct PTerm;
using PTermPtr = std::shared_ptr<const PTerm>;

// Partial terms: ground applications, variable references, and not-yet-
// enumerated automaton nodes carrying constraint fragments.
struct PTerm {
  enum class Kind : uint8_t { Var, App, UNode };
  Kind kind;
  VarId var = 0;                     // Var
  SymbolId sym = 0;                  // App
  std::vector<PTermPtr> children;    // App
  NodeId node = 0;                   // UNode
  std::vector<Fragment> fragments;   // UNode, sorted

  static PTermPtr mk_var(VarId v);
  static PTermPtr mk_app(SymbolId s, std::vector<PTermPtr> children);
  static PTermPtr mk_unode(NodeId n, std::vector<Fragment> fragments);
};

// Position of a subterm inside a binding: child indices through App nodes.
struct Location {
  VarId binding;
  std::vector<uint32_t> pos;
};

struct EnumState {
  std::map<VarId, PTermPtr> bindings;
  std::unordered_map<VarId, VarId> merged;     // union-find parent links
  std::unordered_map<VarId, uint32_t> frag_refs;  // canonical var -> mentions
  VarId next_fresh = kTopVar + 1;

  VarId find(VarId v) const;
  // A variable is solved once no fragment anywhere mentions it.
  bool solved(VarId v) const;
  const PTermPtr* binding_of(VarId v) const;  // canonicalizes; null if unbound
};

// Splits fragments onto child i: path i.p' becomes p', other paths move to
// their own children, emptied fragments vanish. Faults on a root-path
// fragment (those must be suspended, never projected).
std::vector<Fragment> project(const std::vector<Fragment>& phi, uint32_t i);

// Rule applications. Those returning bool report false when the state died
// (a conflicting intersection or an unsatisfiable position), which callers
// treat as a pruned branch.
bool step_choose(NodeStore& s, EnumState& st, const Location& loc, size_t edge_index);
bool step_suspend(NodeStore& s, EnumState& st, const Location& loc);
// Eliminates one var-to-var binding; false when none exists.
bool step_subst(EnumState& st);
void step_choose_mu(NodeStore& s, EnumState& st, const Location& loc);

bool is_fully_enumerated(const EnumState& st);

enum class Schedule : uint8_t { DfsLR, DfsRL };

struct EnumOptions {
  uint64_t limit = UINT64_MAX;  // max states yielded; 0 yields nothing
  Schedule schedule = Schedule::DfsLR;
  // Verifies the progress measure on every rule application and throws on
  // any violation. On in all test suites.
  bool audit = false;
};

struct EnumStats {
  uint64_t steps = 0;
  uint64_t states_explored = 0;  // branch attempts at choice points
  uint64_t dead_branches = 0;
  uint64_t yielded = 0;
};

// Drives rule application to every fully-enumerated state reachable from
// binding the root node to the top variable. The sink may return false to
// stop early.
EnumStats enumerate(NodeStore& s, NodeId n, const EnumOptions& opts,
                    const std::function<bool(const EnumState&)>& sink);
std::vector<EnumState> enumerate_all(NodeStore& s, NodeId n, const EnumOptions& opts = {});

// Grounds a fully-enumerated state: every remaining node occurrence ranges
// over its terms independently, shared variables stay consistent. Faults on
// a state that still carries fragments. expand yields up to `limit` terms
// (cyclic leftovers are deepened until the limit); expand_bounded yields
// exactly the terms of depth <= max_depth.
std::vector<TermId> expand(NodeStore& s, TermStore& ts, const EnumState& st, size_t limit);
std::vector<TermId> expand_bounded(NodeStore& s, TermStore& ts, const EnumState& st,
                                   uint32_t max_depth);

// Textual form of a state: bindings with their partial terms and fragments.
std::string enum_state_to_string(NodeStore& s, const EnumState& st);

}  // namespace ecta
