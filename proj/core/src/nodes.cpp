#include "ecta/nodes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ecta/egraph.hpp"

namespace ecta {

namespace {

inline uint64_t pack64(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

inline bool sorted_contains(const std::vector<uint32_t>& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

size_t NodeStore::RecHash::operator()(const NodeRec& r) const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(r.kind));
  mix(r.index);
  mix(r.body);
  for (const Edge& e : r.edges) {
    mix(e.sym);
    mix(e.pcs);
    for (NodeId c : e.children) mix(c);
    mix(0x9e3779b97f4a7c15ull);
  }
  return static_cast<size_t>(h);
}

size_t NodeStore::PcsHash::operator()(const Pcs& c) const {
  uint64_t h = 14695981039346656037ull;
  for (const Pec& pec : c.classes) {
    for (const Path& p : pec.paths) {
      h ^= path_hash(p);
      h *= 1099511628211ull;
    }
    h ^= 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

NodeStore::NodeStore(SymbolTable& syms) : syms_(syms) {
  NodeId bottom = intern(NodeRec{NodeKind::Plain, 0, 0, {}});
  assert(bottom == kBottom);
  (void)bottom;
  PcsId empty = intern_pcs(Pcs{});
  assert(empty == kEmptyPcs);
  (void)empty;
}

NodeId NodeStore::intern(NodeRec rec) {
  auto it = interned_.find(rec);
  if (it != interned_.end()) return it->second;

  std::vector<uint32_t> fv, tags;
  switch (rec.kind) {
    case NodeKind::Var:
      fv.push_back(rec.index);
      break;
    case NodeKind::Free:
      tags.push_back(rec.index);
      break;
    case NodeKind::Mu:
      for (uint32_t i : fv_[rec.body]) {
        if (i > 0) fv.push_back(i - 1);
      }
      tags = tags_[rec.body];
      break;
    case NodeKind::Plain:
      for (const Edge& e : rec.edges) {
        for (NodeId c : e.children) {
          fv.insert(fv.end(), fv_[c].begin(), fv_[c].end());
          tags.insert(tags.end(), tags_[c].begin(), tags_[c].end());
        }
      }
      std::sort(fv.begin(), fv.end());
      fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
      std::sort(tags.begin(), tags.end());
      tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
      break;
  }

  NodeId id = static_cast<NodeId>(recs_.size());
  interned_.emplace(rec, id);
  recs_.push_back(std::move(rec));
  fv_.push_back(std::move(fv));
  tags_.push_back(std::move(tags));
  return id;
}

PcsId NodeStore::intern_pcs(Pcs normalized) {
  auto it = pcs_interned_.find(normalized);
  if (it != pcs_interned_.end()) return it->second;
  PcsId id = static_cast<PcsId>(pcs_all_.size());
  bool ok = pcs_consistent(normalized);
  pcs_interned_.emplace(normalized, id);
  pcs_all_.push_back(std::move(normalized));
  pcs_consistent_.push_back(ok);
  return id;
}

std::optional<PcsId> NodeStore::pcs_meet(PcsId a, PcsId b) {
  if (a == b) return a;
  if (a == kEmptyPcs) return b;
  if (b == kEmptyPcs) return a;
  uint64_t key = pack64(std::min(a, b), std::max(a, b));
  auto it = pcs_meet_cache_.find(key);
  if (it != pcs_meet_cache_.end()) {
    if (it->second == UINT32_MAX) return std::nullopt;
    return it->second;
  }
  std::vector<Pec> classes = pcs_all_[a].classes;
  classes.insert(classes.end(), pcs_all_[b].classes.begin(), pcs_all_[b].classes.end());
  PathEGraph eg(pcs_normalize(std::move(classes)));
  if (!eg.consistent()) {
    pcs_meet_cache_.emplace(key, UINT32_MAX);
    return std::nullopt;
  }
  PcsId out = intern_pcs(eg.restricted_classes());
  pcs_meet_cache_.emplace(key, out);
  return out;
}

std::optional<Edge> NodeStore::mk_edge(SymbolId sym, std::vector<NodeId> children,
                                       Pcs constraints) {
  uint32_t arity = syms_[sym].arity;
  if (children.size() != arity) {
    throw std::runtime_error("edge for '" + syms_[sym].name + "' given " +
                             std::to_string(children.size()) + " children, arity is " +
                             std::to_string(arity));
  }
  for (NodeId c : children) {
    if (c == kBottom) return std::nullopt;
  }

  Pcs norm = pcs_normalize(std::move(constraints.classes));
  std::vector<Pec> kept;
  for (Pec& pec : norm.classes) {
    if (pec.size() == 1 && pec.paths[0].empty()) continue;  // always holds
    for (const Path& p : pec.paths) {
      if (!p.empty() && p[0] >= arity) return std::nullopt;  // position never exists
    }
    kept.push_back(std::move(pec));
  }
  PcsId id = intern_pcs(Pcs{std::move(kept)});
  if (!pcs_is_consistent(id)) return std::nullopt;
  return Edge{sym, std::move(children), id};
}

NodeId NodeStore::mk_node(std::vector<Edge> edges) {
  auto less = [this](const Edge& x, const Edge& y) {
    const std::string& nx = syms_[x.sym].name;
    const std::string& ny = syms_[y.sym].name;
    if (nx != ny) return nx < ny;
    if (x.children != y.children) return x.children < y.children;
    return pcs_all_[x.pcs] < pcs_all_[y.pcs];
  };
  std::sort(edges.begin(), edges.end(), less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return intern(NodeRec{NodeKind::Plain, 0, 0, std::move(edges)});
}

NodeId NodeStore::mk_mu(NodeId body) {
  if (body == kBottom) return kBottom;
  if (recs_[body].kind == NodeKind::Var && recs_[body].index == 0) return kBottom;
  if (!sorted_contains(fv_[body], 0)) {
    std::unordered_map<uint64_t, NodeId> memo;
    return shift_down(body, 0, memo);
  }
  return intern(NodeRec{NodeKind::Mu, 0, body, {}});
}

NodeId NodeStore::mk_var(uint32_t index) {
  return intern(NodeRec{NodeKind::Var, index, 0, {}});
}

NodeId NodeStore::mk_free(uint32_t tag) {
  return intern(NodeRec{NodeKind::Free, tag, 0, {}});
}

NodeId NodeStore::shift_down(NodeId n, uint32_t depth,
                             std::unordered_map<uint64_t, NodeId>& memo) {
  const auto& fv = fv_[n];
  if (fv.empty() || fv.back() < depth) return n;
  uint64_t key = pack64(n, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  // recs_ may reallocate while children intern, so no NodeRec reference is
  // held across recursion; the edge buffers themselves are stable.
  NodeId out;
  switch (recs_[n].kind) {
    case NodeKind::Var: {
      uint32_t index = recs_[n].index;
      assert(index != depth);
      out = index > depth ? mk_var(index - 1) : n;
      break;
    }
    case NodeKind::Mu:
      out = mk_mu(shift_down(recs_[n].body, depth + 1, memo));
      break;
    case NodeKind::Plain: {
      std::span<const Edge> es(recs_[n].edges);
      std::vector<Edge> edges;
      edges.reserve(es.size());
      for (const Edge& e : es) {
        std::vector<NodeId> kids;
        kids.reserve(e.children.size());
        for (NodeId c : e.children) kids.push_back(shift_down(c, depth, memo));
        edges.push_back(Edge{e.sym, std::move(kids), e.pcs});
      }
      out = mk_node(std::move(edges));
      break;
    }
    case NodeKind::Free:
      out = n;
      break;
  }
  memo.emplace(key, out);
  return out;
}

NodeId NodeStore::bind_rec(NodeId n, uint32_t tag, uint32_t depth,
                           std::unordered_map<uint64_t, NodeId>& memo) {
  if (!sorted_contains(tags_[n], tag)) return n;
  uint64_t key = pack64(n, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  NodeId out;
  switch (recs_[n].kind) {
    case NodeKind::Free:
      out = mk_var(depth);
      break;
    case NodeKind::Mu:
      out = mk_mu(bind_rec(recs_[n].body, tag, depth + 1, memo));
      break;
    case NodeKind::Plain: {
      std::span<const Edge> es(recs_[n].edges);
      std::vector<Edge> edges;
      edges.reserve(es.size());
      for (const Edge& e : es) {
        std::vector<NodeId> kids;
        kids.reserve(e.children.size());
        for (NodeId c : e.children) kids.push_back(bind_rec(c, tag, depth, memo));
        edges.push_back(Edge{e.sym, std::move(kids), e.pcs});
      }
      out = mk_node(std::move(edges));
      break;
    }
    default:
      out = n;
      break;
  }
  memo.emplace(key, out);
  return out;
}

NodeId NodeStore::bind_free(NodeId body, uint32_t tag) {
  if (!sorted_contains(tags_[body], tag)) return body;
  std::unordered_map<uint64_t, NodeId> memo;
  return mk_mu(bind_rec(body, tag, 0, memo));
}

std::span<const Edge> NodeStore::edges(NodeId n) const {
  assert(recs_[n].kind == NodeKind::Plain);
  return recs_[n].edges;
}

NodeId NodeStore::body(NodeId n) const {
  assert(recs_[n].kind == NodeKind::Mu);
  return recs_[n].body;
}

uint32_t NodeStore::var_index(NodeId n) const {
  assert(recs_[n].kind == NodeKind::Var);
  return recs_[n].index;
}

uint32_t NodeStore::free_tag(NodeId n) const {
  assert(recs_[n].kind == NodeKind::Free);
  return recs_[n].index;
}

namespace {

NodeId unfold_subst(NodeStore& s, NodeId mu, NodeId n, uint32_t depth,
                    std::unordered_map<uint64_t, NodeId>& memo) {
  if (!std::binary_search(s.free_vars(n).begin(), s.free_vars(n).end(), depth)) {
    assert(s.free_vars(n).empty() || s.free_vars(n).back() < depth);
    return n;
  }
  uint64_t key = pack64(n, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  NodeId out;
  switch (s.kind(n)) {
    case NodeKind::Var:
      out = mu;  // index == depth given the guard above
      break;
    case NodeKind::Mu:
      out = s.mk_mu(unfold_subst(s, mu, s.body(n), depth + 1, memo));
      break;
    case NodeKind::Plain: {
      std::vector<Edge> edges;
      for (const Edge& e : s.edges(n)) {
        std::vector<NodeId> kids;
        kids.reserve(e.children.size());
        for (NodeId c : e.children) kids.push_back(unfold_subst(s, mu, c, depth, memo));
        edges.push_back(Edge{e.sym, std::move(kids), e.pcs});
      }
      out = s.mk_node(std::move(edges));
      break;
    }
    default:
      out = n;
      break;
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

NodeId unfold(NodeStore& s, NodeId mu) {
  assert(s.kind(mu) == NodeKind::Mu);
  assert(s.free_vars(mu).empty());
  auto it = s.unfold_cache().find(mu);
  if (it != s.unfold_cache().end()) return it->second;
  std::unordered_map<uint64_t, NodeId> memo;
  NodeId out = unfold_subst(s, mu, s.body(mu), 0, memo);
  s.unfold_cache().emplace(mu, out);
  return out;
}

NodeId unfold_fully(NodeStore& s, NodeId n) {
  while (s.kind(n) == NodeKind::Mu) n = unfold(s, n);
  return n;
}

namespace {

NodeId normalize_rec(NodeStore& s, NodeId n, std::unordered_map<NodeId, NodeId>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  NodeId out;
  switch (s.kind(n)) {
    case NodeKind::Plain: {
      std::vector<Edge> edges;
      for (const Edge& e : s.edges(n)) {
        std::vector<NodeId> kids;
        kids.reserve(e.children.size());
        bool dead = false;
        for (NodeId c : e.children) {
          NodeId nc = normalize_rec(s, c, memo);
          if (nc == kBottom) {
            dead = true;
            break;
          }
          kids.push_back(nc);
        }
        if (dead) continue;
        auto rebuilt = s.mk_edge(e.sym, std::move(kids), s.pcs(e.pcs));
        if (rebuilt) edges.push_back(std::move(*rebuilt));
      }
      out = s.mk_node(std::move(edges));
      break;
    }
    case NodeKind::Mu:
      out = s.mk_mu(normalize_rec(s, s.body(n), memo));
      break;
    default:
      out = n;
      break;
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace

NodeId normalize(NodeStore& s, NodeId n) {
  std::unordered_map<NodeId, NodeId> memo;
  return normalize_rec(s, n, memo);
}

NodeId skeleton(NodeStore& s, NodeId n) {
  auto it = s.skeleton_cache().find(n);
  if (it != s.skeleton_cache().end()) return it->second;
  NodeId out;
  switch (s.kind(n)) {
    case NodeKind::Plain: {
      std::vector<Edge> edges;
      for (const Edge& e : s.edges(n)) {
        std::vector<NodeId> kids;
        kids.reserve(e.children.size());
        for (NodeId c : e.children) kids.push_back(skeleton(s, c));
        edges.push_back(Edge{e.sym, std::move(kids), kEmptyPcs});
      }
      out = s.mk_node(std::move(edges));
      break;
    }
    case NodeKind::Mu:
      out = s.mk_mu(skeleton(s, s.body(n)));
      break;
    default:
      out = n;
      break;
  }
  s.skeleton_cache().emplace(n, out);
  return out;
}

NodeId node_union(NodeStore& s, NodeId a, NodeId b) {
  if (a == b) return a;
  if (a == kBottom) return b;
  if (b == kBottom) return a;
  a = unfold_fully(s, a);
  b = unfold_fully(s, b);
  assert(s.kind(a) == NodeKind::Plain && s.kind(b) == NodeKind::Plain);
  std::vector<Edge> edges(s.edges(a).begin(), s.edges(a).end());
  edges.insert(edges.end(), s.edges(b).begin(), s.edges(b).end());
  return s.mk_node(std::move(edges));
}

namespace {

void nodes_at_rec(NodeStore& s, NodeId n, const Path& p, size_t i,
                  std::set<uint64_t>& seen, std::vector<NodeId>& out) {
  if (i == p.size()) {
    out.push_back(n);
    return;
  }
  if (n == kBottom) return;
  if (s.kind(n) == NodeKind::Mu) n = unfold_fully(s, n);
  if (!seen.insert(pack64(n, static_cast<uint32_t>(i))).second) return;
  assert(s.kind(n) == NodeKind::Plain);
  for (const Edge& e : s.edges(n)) {
    if (p[i] < e.children.size()) {
      nodes_at_rec(s, e.children[p[i]], p, i + 1, seen, out);
    }
  }
}

}  // namespace

std::vector<NodeId> nodes_at(NodeStore& s, NodeId n, const Path& p) {
  std::set<uint64_t> seen;
  std::vector<NodeId> out;
  nodes_at_rec(s, n, p, 0, seen, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NodeId subautomaton_at(NodeStore& s, NodeId n, const Path& p) {
  NodeId acc = kBottom;
  for (NodeId m : nodes_at(s, n, p)) acc = node_union(s, acc, m);
  return acc;
}

namespace {

const std::vector<TermId>& denote_rec(NodeStore& s, TermStore& ts, NodeId n, uint32_t depth,
                                      std::unordered_map<uint64_t, std::vector<TermId>>& memo) {
  uint64_t key = pack64(n, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<TermId> out;
  if (n != kBottom && depth > 0) {
    NodeId m = unfold_fully(s, n);
    if (m != kBottom) {
      assert(s.kind(m) == NodeKind::Plain);
      std::set<TermId> terms;
      for (const Edge& e : s.edges(m)) {
        size_t arity = e.children.size();
        std::vector<const std::vector<TermId>*> sets(arity);
        bool dead = false;
        for (size_t i = 0; i < arity; ++i) {
          sets[i] = &denote_rec(s, ts, e.children[i], depth - 1, memo);
          if (sets[i]->empty()) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        const Pcs& constraints = s.pcs(e.pcs);
        std::vector<size_t> idx(arity, 0);
        std::vector<TermId> combo(arity);
        while (true) {
          for (size_t i = 0; i < arity; ++i) combo[i] = (*sets[i])[idx[i]];
          TermId t = ts.mk(e.sym, combo);
          if (constraints.empty() || pcs_satisfied(ts, constraints, t)) terms.insert(t);
          size_t i = 0;
          for (; i < arity; ++i) {
            if (++idx[i] < sets[i]->size()) break;
            idx[i] = 0;
          }
          if (i == arity) break;
        }
      }
      out.assign(terms.begin(), terms.end());
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<TermId> denote_bounded(NodeStore& s, TermStore& ts, NodeId n, uint32_t depth) {
  std::unordered_map<uint64_t, std::vector<TermId>> memo;
  return denote_rec(s, ts, n, depth, memo);
}

std::vector<NodeId> reachable_nodes(const NodeStore& s, NodeId n) {
  std::vector<NodeId> stack{n};
  std::set<NodeId> seen{n};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    switch (s.kind(cur)) {
      case NodeKind::Plain:
        for (const Edge& e : s.edges(cur)) {
          for (NodeId c : e.children) {
            if (seen.insert(c).second) stack.push_back(c);
          }
        }
        break;
      case NodeKind::Mu:
        if (seen.insert(s.body(cur)).second) stack.push_back(s.body(cur));
        break;
      default:
        break;
    }
  }
  return std::vector<NodeId>(seen.begin(), seen.end());
}

size_t reachable_edge_count(const NodeStore& s, NodeId n) {
  size_t count = 0;
  for (NodeId m : reachable_nodes(s, n)) {
    if (s.kind(m) == NodeKind::Plain) count += s.edges(m).size();
  }
  return count;
}

bool is_finitely_constrained(NodeStore& s, NodeId n) {
  for (NodeId m : reachable_nodes(s, n)) {
    if (s.kind(m) == NodeKind::Mu && skeleton(s, s.body(m)) != s.body(m)) return false;
  }
  return true;
}

uint32_t lasso_height(NodeStore& s, NodeId n) {
  auto it = s.lasso_cache().find(n);
  if (it != s.lasso_cache().end()) return it->second;
  uint32_t h = 0;
  switch (s.kind(n)) {
    case NodeKind::Plain: {
      uint32_t best = 0;
      for (const Edge& e : s.edges(n)) {
        for (NodeId c : e.children) best = std::max(best, lasso_height(s, c));
      }
      h = 1 + best;
      break;
    }
    case NodeKind::Mu:
      h = 1 + lasso_height(s, s.body(n));
      break;
    default:
      h = 0;
      break;
  }
  s.lasso_cache().emplace(n, h);
  return h;
}

}  // namespace ecta
