#include "ecta/egraph.hpp"

#include <algorithm>
#include <cassert>

namespace ecta {

uint32_t PathEGraph::find(uint32_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

uint32_t PathEGraph::node_for(const Path& p) {
  auto it = interned_.find(p);
  if (it != interned_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(parent_.size());
  parent_.push_back(id);
  children_.emplace_back();
  interned_.emplace(p, id);
  if (!p.empty()) {
    Path pre(p.begin(), p.end() - 1);
    uint32_t pid = node_for(pre);
    // Register this node as ".last applied to prefix"; if the prefix's
    // class already has that child index, queue a congruence merge.
    uint32_t prep = find(pid);
    auto [cit, fresh] = children_[prep].emplace(p.back(), id);
    if (!fresh) pending_.emplace_back(cit->second, id);
  }
  return id;
}

void PathEGraph::merge(uint32_t a, uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  // Keep the class with the larger congruence table as representative.
  if (children_[a].size() < children_[b].size()) std::swap(a, b);
  parent_[b] = a;
  for (auto& [idx, child] : children_[b]) {
    auto [it, fresh] = children_[a].emplace(idx, child);
    if (!fresh) pending_.emplace_back(it->second, child);
  }
  children_[b].clear();
}

PathEGraph::PathEGraph(const Pcs& c) {
  node_for(path_root());
  for (const Pec& cls : c.classes)
    for (const Path& p : cls.paths) {
      node_for(p);
      mentioned_.push_back(p);
    }
  for (const Pec& cls : c.classes)
    for (size_t i = 1; i < cls.paths.size(); ++i)
      pending_.emplace_back(interned_.at(cls.paths[0]), interned_.at(cls.paths[i]));
  while (!pending_.empty()) {
    auto [a, b] = pending_.back();
    pending_.pop_back();
    merge(a, b);
  }
  freeze();
}

void PathEGraph::freeze() {
  rep_to_class_.assign(parent_.size(), UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t i = 0; i < parent_.size(); ++i) {
    uint32_t r = find(i);
    if (rep_to_class_[r] == UINT32_MAX) rep_to_class_[r] = next++;
  }
  class_children_.assign(next, {});
  for (uint32_t i = 0; i < parent_.size(); ++i) {
    uint32_t r = find(i);
    if (i != r) continue;
    auto& dst = class_children_[rep_to_class_[r]];
    for (auto& [idx, child] : children_[i]) dst.emplace(idx, rep_to_class_[find(child)]);
  }
  root_class_ = rep_to_class_[find(interned_.at(path_root()))];

  // Cycle check over the class graph (a class reachable from itself via
  // child edges would equate a term with one of its own subterms).
  enum { White, Grey, Black };
  std::vector<uint8_t> color(class_children_.size(), White);
  for (uint32_t start = 0; start < class_children_.size() && consistent_; ++start) {
    if (color[start] != White) continue;
    // Iterative DFS with an explicit entry/exit stack.
    std::vector<std::pair<uint32_t, bool>> stack{{start, false}};
    while (!stack.empty()) {
      auto [cls, done] = stack.back();
      stack.pop_back();
      if (done) {
        color[cls] = Black;
        continue;
      }
      if (color[cls] != White) continue;
      color[cls] = Grey;
      stack.emplace_back(cls, true);
      for (auto& [idx, child] : class_children_[cls]) {
        if (color[child] == Grey) {
          consistent_ = false;
          stack.clear();
          break;
        }
        if (color[child] == White) stack.emplace_back(child, false);
      }
    }
  }
}

std::pair<uint32_t, Path> PathEGraph::resolve(const Path& p) const {
  uint32_t cls = root_class_;
  size_t i = 0;
  while (i < p.size()) {
    auto it = class_children_[cls].find(p[i]);
    if (it == class_children_[cls].end()) break;
    cls = it->second;
    ++i;
  }
  return {cls, Path(p.begin() + i, p.end())};
}

bool PathEGraph::same_class(const Path& a, const Path& b) const {
  return resolve(a) == resolve(b);
}

Pcs PathEGraph::restricted_classes() const {
  std::map<uint32_t, std::vector<Path>> groups;
  for (const Path& p : mentioned_) {
    uint32_t cls = rep_to_class_[find(interned_.at(p))];
    groups[cls].push_back(p);
  }
  std::vector<Pec> classes;
  classes.reserve(groups.size());
  for (auto& [cls, paths] : groups) classes.emplace_back(std::move(paths));
  return pcs_normalize(std::move(classes));
}

bool pcs_consistent(const Pcs& c) { return PathEGraph(c).consistent(); }

}  // namespace ecta
