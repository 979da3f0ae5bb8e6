#include <algorithm>
#include <unordered_map>

#include "ecta/nodes.hpp"

namespace ecta {

namespace {

inline uint64_t pack64(uint32_t a, uint32_t b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

struct Intersector {
  NodeStore& s;
  // pair key -> placeholder tag handed out if the pair recurses into itself
  std::unordered_map<uint64_t, uint32_t> in_flight;

  NodeId rec(NodeId a, NodeId b) {
    if (a == b) return a;
    if (a == kBottom || b == kBottom) return kBottom;
    uint64_t key = pack64(std::min(a, b), std::max(a, b));
    if (auto it = s.intersect_cache().find(key); it != s.intersect_cache().end()) {
      return it->second;
    }
    if (auto it = in_flight.find(key); it != in_flight.end()) {
      return s.mk_free(it->second);
    }
    uint32_t tag = s.fresh_tag();
    in_flight.emplace(key, tag);

    NodeId ua = unfold_fully(s, a);
    NodeId ub = unfold_fully(s, b);
    assert(s.kind(ua) == NodeKind::Plain && s.kind(ub) == NodeKind::Plain);

    std::unordered_map<SymbolId, std::vector<const Edge*>> by_sym;
    for (const Edge& ea : s.edges(ua)) by_sym[ea.sym].push_back(&ea);

    std::vector<Edge> out_edges;
    for (const Edge& eb : s.edges(ub)) {
      auto group = by_sym.find(eb.sym);
      if (group == by_sym.end()) continue;
      for (const Edge* ea : group->second) {
        auto meet = s.pcs_meet(ea->pcs, eb.pcs);
        if (!meet) continue;
        size_t arity = ea->children.size();
        std::vector<NodeId> kids(arity);
        bool dead = false;
        for (size_t i = 0; i < arity; ++i) {
          kids[i] = rec(ea->children[i], eb.children[i]);
          if (kids[i] == kBottom) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        auto built = s.mk_edge(eb.sym, std::move(kids), s.pcs(*meet));
        if (built) out_edges.push_back(std::move(*built));
      }
    }
    NodeId result = s.mk_node(std::move(out_edges));
    in_flight.erase(key);
    // A placeholder for this pair deep in the body means the language is
    // cyclic through here; tie the knot. Placeholders of pairs still being
    // computed further up keep the result uncacheable for now.
    result = s.bind_free(result, tag);
    if (s.closed(result)) s.intersect_cache().emplace(key, result);
    return result;
  }
};

}  // namespace

NodeId intersect(NodeStore& s, NodeId a, NodeId b) {
  assert(s.closed(a) && s.closed(b));
  Intersector ix{s};
  return ix.rec(a, b);
}

}  // namespace ecta
