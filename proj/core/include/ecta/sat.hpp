#pragma once

// CNF satisfiability through automaton enumeration. Every clause node holds
// one transition per literal; each literal pins one slot of a shared
// assignment term, and equality classes across clauses force all copies of
// the assignment to agree. Enumeration then surfaces models, with variables
// nothing constrained left as wildcards.

#include <cstdint>
#include <string>
#include <vector>

#include "ecta/enumerate.hpp"
#include "ecta/nodes.hpp"

namespace ecta {

struct Cnf {
  uint32_t num_vars = 0;
  std::vector<std::vector<int32_t>> clauses;  // DIMACS literals, 1-based
};

Cnf parse_dimacs(const std::string& text);  // throws std::runtime_error
std::string cnf_to_dimacs(const Cnf& cnf);

struct CnfEncoding {
  NodeId root = kBottom;
  NodeId bool_node = kBottom;  // either truth value
  NodeId t_node = kBottom;
  NodeId f_node = kBottom;
  SymbolId assign_sym = 0;
  uint32_t num_vars = 0;
};

CnfEncoding encode_cnf(NodeStore& s, const Cnf& cnf);

// Truth value forced on a variable by a model; Star means both work.
enum class TruthVal : int8_t { False = 0, True = 1, Star = -1 };

struct SatModel {
  std::vector<TruthVal> vals;  // indexed by variable - 1
};

struct SatOptions {
  bool all = false;  // keep enumerating past the first model
  Schedule schedule = Schedule::DfsLR;
  bool audit = false;
  // Static reduction passes before enumeration. Off by default: the clause
  // constraints all target the one shared assignment node, so enumeration
  // alone already prunes at the first conflicting clause.
  int reduce_rounds = 0;
};

struct SatResult {
  bool sat = false;
  std::vector<SatModel> models;   // wildcard models, discovery order
  uint64_t full_model_count = 0;  // distinct total assignments (num_vars <= 24 only)
  EnumStats stats;
  long edges_removed = 0;
};

SatResult sat_solve(NodeStore& s, const Cnf& cnf, const SatOptions& opts = {});

// Reads the shared assignment out of one enumerated state.
SatModel extract_model(NodeStore& s, const CnfEncoding& enc, const EnumState& st);

std::string model_to_string(const SatModel& m);  // "v 1 -2 0" style, Star as "*"

}  // namespace ecta
