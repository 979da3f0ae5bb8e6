#pragma once

// Seeded generator for small acyclic automata, used by the property suites
// and the `random` CLI subcommand. The same seed always yields the same
// automaton for a given option set.

#include <cstdint>
#include <random>

#include "ecta/nodes.hpp"

namespace ecta {

struct RandomEctaOptions {
  uint32_t max_nodes = 7;
  uint32_t max_edges_per_node = 3;
  uint32_t max_pecs_per_edge = 3;
  double constrain_prob = 0.5;  // chance a non-leaf edge carries constraints
};

NodeId random_acyclic_ecta(NodeStore& s, std::mt19937_64& rng,
                           const RandomEctaOptions& opts = {});

}  // namespace ecta
