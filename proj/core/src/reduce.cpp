#include "ecta/reduce.hpp"

#include <unordered_map>

namespace ecta {

namespace {

inline uint64_t pack64(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

struct PathIntersector {
  NodeStore& s;
  NodeId m;
  std::unordered_map<uint64_t, NodeId> memo;

  NodeId rec(NodeId n, const Path& p, size_t i) {
    if (i == p.size()) return intersect(s, n, m);
    if (n == kBottom) return kBottom;
    NodeId u = unfold_fully(s, n);
    uint64_t key = pack64(u, static_cast<uint32_t>(i));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Edge> out;
    for (const Edge& e : s.edges(u)) {
      if (p[i] >= e.children.size()) continue;
      NodeId narrowed = rec(e.children[p[i]], p, i + 1);
      if (narrowed == kBottom) continue;
      std::vector<NodeId> kids(e.children.begin(), e.children.end());
      kids[p[i]] = narrowed;
      auto built = s.mk_edge(e.sym, std::move(kids), s.pcs(e.pcs));
      if (built) out.push_back(std::move(*built));
    }
    NodeId res = s.mk_node(std::move(out));
    memo.emplace(key, res);
    return res;
  }
};

std::optional<Edge> edge_intersect_at_path(NodeStore& s, const Edge& e, const Path& p,
                                           NodeId m) {
  assert(!p.empty());
  if (p[0] >= e.children.size()) return std::nullopt;
  PathIntersector pi{s, m};
  NodeId narrowed = pi.rec(e.children[p[0]], Path(p.begin() + 1, p.end()), 0);
  if (narrowed == kBottom) return std::nullopt;
  std::vector<NodeId> kids(e.children.begin(), e.children.end());
  kids[p[0]] = narrowed;
  return s.mk_edge(e.sym, std::move(kids), s.pcs(e.pcs));
}

}  // namespace

NodeId intersect_at_path(NodeStore& s, NodeId n, const Path& p, NodeId m) {
  PathIntersector pi{s, m};
  return pi.rec(n, p, 0);
}

bool reduction_criterion_holds(NodeStore& s, const Edge& e, const Pec& c) {
  NodeId node_e = s.mk_node({e});
  std::vector<NodeId> subs;
  subs.reserve(c.size());
  for (const Path& p : c.paths) subs.push_back(subautomaton_at(s, node_e, p));
  for (size_t i = 0; i < c.size(); ++i) {
    for (NodeId n : nodes_at(s, node_e, c.paths[i])) {
      for (size_t j = 0; j < c.size(); ++j) {
        if (intersect(s, n, subs[j]) == kBottom) return false;
      }
    }
  }
  return true;
}

std::optional<Edge> reduce_pec_basic(NodeStore& s, const Edge& e, const Pec& c) {
  NodeId node_e = s.mk_node({e});
  NodeId star = subautomaton_at(s, node_e, c.paths[0]);
  for (size_t i = 1; i < c.size() && star != kBottom; ++i) {
    star = intersect(s, star, subautomaton_at(s, node_e, c.paths[i]));
  }
  if (star == kBottom) return std::nullopt;
  std::optional<Edge> cur = e;
  for (const Path& p : c.paths) {
    cur = edge_intersect_at_path(s, *cur, p, star);
    if (!cur) return std::nullopt;
  }
  return cur;
}

std::optional<Edge> reduce_pec_optimized(NodeStore& s, const Edge& e, const Pec& c) {
  if (c.size() < 2) return e;
  NodeId node_e = s.mk_node({e});
  std::vector<NodeId> subs;
  subs.reserve(c.size());
  for (const Path& p : c.paths) subs.push_back(subautomaton_at(s, node_e, p));
  std::optional<Edge> cur = e;
  for (size_t i = 0; i < c.size(); ++i) {
    NodeId m = kBottom;
    bool first = true;
    for (size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      m = first ? subs[j] : intersect(s, m, subs[j]);
      first = false;
      if (m == kBottom) break;
    }
    if (m == kBottom) return std::nullopt;
    cur = edge_intersect_at_path(s, *cur, c.paths[i], m);
    if (!cur) return std::nullopt;
  }
  return cur;
}

namespace {

NodeId reduce_round(NodeStore& s, NodeId n, bool basic,
                    std::unordered_map<NodeId, NodeId>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  NodeId out = n;
  if (s.kind(n) == NodeKind::Plain) {
    std::vector<Edge> edges;
    for (const Edge& e : s.edges(n)) {
      std::vector<NodeId> kids;
      kids.reserve(e.children.size());
      bool dead = false;
      for (NodeId c : e.children) {
        NodeId rc = reduce_round(s, c, basic, memo);
        if (rc == kBottom) {
          dead = true;
          break;
        }
        kids.push_back(rc);
      }
      if (dead) continue;
      std::optional<Edge> cur = s.mk_edge(e.sym, std::move(kids), s.pcs(e.pcs));
      if (!cur) continue;
      Pcs classes = s.pcs(cur->pcs);  // copy: the edge is rebuilt while iterating
      for (const Pec& pec : classes.classes) {
        cur = basic ? reduce_pec_basic(s, *cur, pec) : reduce_pec_optimized(s, *cur, pec);
        if (!cur) break;
      }
      if (cur) edges.push_back(std::move(*cur));
    }
    out = s.mk_node(std::move(edges));
  }
  // Binder bodies are constraint-free for finitely-constrained input, so Mu
  // nodes pass through untouched.
  memo.emplace(n, out);
  return out;
}

}  // namespace

std::pair<NodeId, ReductionReport> reduce_fixpoint(NodeStore& s, NodeId n,
                                                   const ReduceOptions& opts) {
  ReductionReport report;
  size_t edges_before = reachable_edge_count(s, n);
  NodeId cur = n;
  for (int round = 0; round < opts.max_rounds; ++round) {
    report.rounds_run = round + 1;
    std::unordered_map<NodeId, NodeId> memo;
    NodeId next = reduce_round(s, cur, opts.basic, memo);
    if (next == cur) {
      report.converged = true;
      break;
    }
    cur = next;
  }
  report.edges_removed =
      static_cast<long>(edges_before) - static_cast<long>(reachable_edge_count(s, cur));
  return {cur, report};
}

}  // namespace ecta
