#pragma once

// Line-oriented textual form for automata, plus Graphviz export.
//
//   # comment
//   node 1 = { f(2, 3) where {0 = 1.0}; g(2) }
//   node 2 = { a }
//   node 3 = { b }
//   mu 4 = 1
//   var 5 = 0
//   root 1
//
// Ids are file-local; the parser interns bottom-up and returns the root.
// `var k` is the de Bruijn index of an enclosing `mu`.

#include <string>

#include "ecta/nodes.hpp"

namespace ecta {

NodeId parse_ecta_text(NodeStore& s, const std::string& text);
std::string print_ecta_text(NodeStore& s, NodeId root);

std::string export_dot(NodeStore& s, NodeId root);

}  // namespace ecta
