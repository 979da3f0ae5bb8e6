#pragma once

// Hash-consed automaton nodes. A node is a set of transitions (edges); an
// edge carries a symbol, child nodes, and a path constraint set that forces
// equality between subterms under the edge. Cyclic automata use explicit
// binders (Mu) with de Bruijn variables, so alpha-equivalent cycles intern
// to the same id. Free placeholder nodes exist only while a cycle is being
// tied; finished values never contain them.

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ecta/paths.hpp"
#include "ecta/terms.hpp"

namespace ecta {

using NodeId = uint32_t;
using PcsId = uint32_t;

// The empty node: accepts nothing. Interned first, so it is always id 0.
inline constexpr NodeId kBottom = 0;
inline constexpr PcsId kEmptyPcs = 0;

enum class NodeKind : uint8_t {
  Plain,  // a set of edges
  Mu,     // cycle binder
  Var,    // de Bruijn reference to an enclosing Mu
  Free,   // transient placeholder for a cycle not yet tied
};

struct Edge {
  SymbolId sym;
  std::vector<NodeId> children;
  PcsId pcs;

  bool operator==(const Edge&) const = default;
};

class NodeStore {
 public:
  explicit NodeStore(SymbolTable& syms);

  // Builds an edge, or nothing when the edge can accept no term: a child is
  // the empty node, a constraint path points at a child index the symbol
  // does not have, or the constraints are inconsistent. Constraints are
  // normalized; the tautological class {e} is dropped.
  std::optional<Edge> mk_edge(SymbolId sym, std::vector<NodeId> children, Pcs constraints);

  // Interns a node from edges (sorted and deduplicated here). No edges
  // means the empty node.
  NodeId mk_node(std::vector<Edge> edges);

  // Interns a cycle binder. Degenerate binders normalize away: an empty or
  // immediately-self-referential body is the empty node, and an unused
  // binder is dropped.
  NodeId mk_mu(NodeId body);

  NodeId mk_var(uint32_t index);
  NodeId mk_free(uint32_t tag);
  uint32_t fresh_tag() { return next_tag_++; }

  // Replaces placeholder `tag` with a variable bound by a new binder and
  // wraps the body in that binder. Identity (no binder) when the tag does
  // not occur.
  NodeId bind_free(NodeId body, uint32_t tag);

  NodeKind kind(NodeId n) const { return recs_[n].kind; }
  std::span<const Edge> edges(NodeId n) const;
  NodeId body(NodeId n) const;
  uint32_t var_index(NodeId n) const;
  uint32_t free_tag(NodeId n) const;

  // Free de Bruijn indices and free placeholder tags anywhere inside n,
  // sorted ascending. Computed once at intern time.
  const std::vector<uint32_t>& free_vars(NodeId n) const { return fv_[n]; }
  const std::vector<uint32_t>& free_tags(NodeId n) const { return tags_[n]; }
  bool closed(NodeId n) const { return fv_[n].empty() && tags_[n].empty(); }

  const Pcs& pcs(PcsId id) const { return pcs_all_[id]; }
  bool pcs_is_consistent(PcsId id) const { return pcs_consistent_[id]; }
  PcsId intern_pcs(Pcs normalized);

  // Consistent closure of the union of two constraint sets, restricted back
  // to the mentioned paths; nothing when the union is inconsistent.
  std::optional<PcsId> pcs_meet(PcsId a, PcsId b);

  SymbolTable& symbols() { return syms_; }
  const SymbolTable& symbols() const { return syms_; }
  size_t node_count() const { return recs_.size(); }

  // persistent operation caches (see matching free functions)
  std::unordered_map<uint64_t, NodeId>& intersect_cache() { return intersect_cache_; }
  std::unordered_map<NodeId, NodeId>& unfold_cache() { return unfold_cache_; }
  std::unordered_map<NodeId, NodeId>& skeleton_cache() { return skeleton_cache_; }
  std::unordered_map<NodeId, uint32_t>& lasso_cache() { return lasso_cache_; }

 private:
  struct NodeRec {
    NodeKind kind;
    uint32_t index = 0;   // Var index or Free tag
    NodeId body = 0;      // Mu
    std::vector<Edge> edges;
    bool operator==(const NodeRec&) const = default;
  };
  struct RecHash {
    size_t operator()(const NodeRec& r) const;
  };
  struct PcsHash {
    size_t operator()(const Pcs& c) const;
  };

  NodeId intern(NodeRec rec);
  NodeId shift_down(NodeId n, uint32_t depth,
                    std::unordered_map<uint64_t, NodeId>& memo);
  NodeId bind_rec(NodeId n, uint32_t tag, uint32_t depth,
                  std::unordered_map<uint64_t, NodeId>& memo);

  SymbolTable& syms_;
  std::vector<NodeRec> recs_;
  std::unordered_map<NodeRec, NodeId, RecHash> interned_;
  std::vector<std::vector<uint32_t>> fv_;
  std::vector<std::vector<uint32_t>> tags_;

  std::vector<Pcs> pcs_all_;
  std::vector<bool> pcs_consistent_;
  std::unordered_map<Pcs, PcsId, PcsHash> pcs_interned_;
  std::unordered_map<uint64_t, PcsId> pcs_meet_cache_;

  uint32_t next_tag_ = 0;
  std::unordered_map<uint64_t, NodeId> intersect_cache_;
  std::unordered_map<NodeId, NodeId> unfold_cache_;
  std::unordered_map<NodeId, NodeId> skeleton_cache_;
  std::unordered_map<NodeId, uint32_t> lasso_cache_;
};

// Bottom-up rebuild through the constructors; prunes edges that became
// dead and re-normalizes binders.
NodeId normalize(NodeStore& s, NodeId n);

// The same automaton with every constraint erased.
NodeId skeleton(NodeStore& s, NodeId n);

// Accepts the union of the two languages.
NodeId node_union(NodeStore& s, NodeId a, NodeId b);

// Accepts exactly the terms both accept. Handles cyclic inputs; the result
// ties its own cycles when the recursion meets a pair it is already
// computing.
NodeId intersect(NodeStore& s, NodeId a, NodeId b);

// One unrolling of a binder: the body with the binder's variable replaced
// by the whole Mu node. Input must be a closed Mu.
NodeId unfold(NodeStore& s, NodeId mu);
// Unrolls until the head is not a binder.
NodeId unfold_fully(NodeStore& s, NodeId n);

// Nodes reachable at a path: skips through binders, fans out over edges,
// ignores edges too narrow for the path.
std::vector<NodeId> nodes_at(NodeStore& s, NodeId n, const Path& p);
// Union of nodes_at; the empty node when the path reaches nothing.
NodeId subautomaton_at(NodeStore& s, NodeId n, const Path& p);

// Every accepted term of depth <= depth (leaf depth is 1), deduplicated and
// sorted. The reference semantics the rest of the library is tested against.
std::vector<TermId> denote_bounded(NodeStore& s, TermStore& ts, NodeId n, uint32_t depth);

// True when no cycle passes through a constrained transition, i.e. every
// binder's body equals its own skeleton.
bool is_finitely_constrained(NodeStore& s, NodeId n);

// Height where variables count as leaves; strictly larger than the height
// of any edge child. Used by the enumeration progress audit.
uint32_t lasso_height(NodeStore& s, NodeId n);

// Reachability through edge children and binder bodies, n included.
std::vector<NodeId> reachable_nodes(const NodeStore& s, NodeId n);
size_t reachable_edge_count(const NodeStore& s, NodeId n);

}  // namespace ecta
