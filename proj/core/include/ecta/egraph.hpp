#pragma once

// Congruence closure over path constraint sets. The closure of a PCS can be
// infinite as a set of path equalities, but it is represented finitely by an
// e-graph whose only constructors are the unary child-index applications
// (the node for path p.i is ".i applied to the node for p").

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ecta/paths.hpp"

namespace ecta {

class PathEGraph {
 public:
  explicit PathEGraph(const Pcs& c);

  // A closed PCS is consistent iff the class graph is acyclic, i.e. no
  // class is forced equal to a subterm position of itself.
  bool consistent() const { return consistent_; }

  // Equality of two arbitrary paths under the closure (they need not have
  // been mentioned in the input PCS).
  bool same_class(const Path& a, const Path& b) const;

  // The closure's classes restricted to the paths mentioned in the input,
  // re-normalized. Overapproximation-free: satisfaction of the result on a
  // term that is defined at the mentioned paths coincides with the input's.
  Pcs restricted_classes() const;

  // Frozen class graph for witness construction: classes are renumbered
  // 0..class_count-1; child(k) maps a child index to another class.
  size_t class_count() const { return class_children_.size(); }
  const std::map<uint32_t, uint32_t>& class_children(uint32_t cls) const {
    return class_children_[cls];
  }
  // Class of a mentioned-or-prefix path; any path works (walks congruence).
  // Returns the pair (class, unresolved suffix). An empty suffix means the
  // path's subterm position is pinned to that class.
  std::pair<uint32_t, Path> resolve(const Path& p) const;

 private:
  uint32_t node_for(const Path& p);  // interns all prefixes
  uint32_t find(uint32_t x) const;
  void merge(uint32_t a, uint32_t b);
  void freeze();

  // union-find over e-nodes (one per materialized path prefix)
  mutable std::vector<uint32_t> parent_;
  // per-representative congruence table: child index -> e-node
  std::vector<std::map<uint32_t, uint32_t>> children_;
  std::vector<std::pair<uint32_t, uint32_t>> pending_;
  std::unordered_map<Path, uint32_t, PathHasher> interned_;
  std::vector<Path> mentioned_;

  // frozen view
  bool consistent_ = true;
  std::vector<uint32_t> rep_to_class_;  // e-node rep -> dense class id
  std::vector<std::map<uint32_t, uint32_t>> class_children_;
  uint32_t root_class_ = 0;
};

// Convenience wrappers matching the operation surface.
inline PathEGraph pcs_closure(const Pcs& c) { return PathEGraph(c); }
bool pcs_consistent(const Pcs& c);

}  // namespace ecta
