#pragma once

// Static reduction: narrowing constrained positions so that every value a
// position can take is matched by the positions it is equated with. Removes
// transitions that can never participate in an accepted term, which is what
// keeps later enumeration from exploring them.

#include <optional>
#include <utility>

#include "ecta/nodes.hpp"

namespace ecta {

struct ReductionReport {
  int rounds_run = 0;
  // reachable edges before minus after; negative if rebuilding grew the DAG
  long edges_removed = 0;
  bool converged = false;
};

// Narrows the nodes reachable at path p in n to their intersection with m.
// Terms that do not define position p are dropped (edges too narrow for the
// path die).
NodeId intersect_at_path(NodeStore& s, NodeId n, const Path& p, NodeId m);

// True iff every value reachable at one path of c can be matched at every
// other path of c.
bool reduction_criterion_holds(NodeStore& s, const Edge& e, const Pec& c);

// One constraint class of one edge made mutually consistent. Nothing when
// every term of the edge violates c. Basic narrows all positions to the
// intersection of all of them; optimized narrows each position only by the
// others, avoiding junk transitions the basic variant can introduce.
std::optional<Edge> reduce_pec_basic(NodeStore& s, const Edge& e, const Pec& c);
std::optional<Edge> reduce_pec_optimized(NodeStore& s, const Edge& e, const Pec& c);

struct ReduceOptions {
  int max_rounds = 30;
  bool basic = false;
};

// Reduces every constrained edge bottom-up, repeating until the hash-consed
// root stops changing or max_rounds is hit.
std::pair<NodeId, ReductionReport> reduce_fixpoint(NodeStore& s, NodeId n,
                                                   const ReduceOptions& opts = {});

}  // namespace ecta
