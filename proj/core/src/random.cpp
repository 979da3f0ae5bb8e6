#include "ecta/random.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ecta {

namespace {

struct SymDesc {
  const char* name;
  uint32_t arity;
};

// one name per arity bucket so reruns never hit an arity conflict
constexpr SymDesc kPool[] = {{"a", 0}, {"b", 0}, {"c", 0}, {"f", 1},
                             {"g", 1}, {"p", 2}, {"q", 2}, {"t", 3}};

// random walk down the skeleton, geometric stopping
Path random_path(NodeStore& s, std::mt19937_64& rng, const Edge& e) {
  uint32_t head = std::uniform_int_distribution<uint32_t>(
      0, static_cast<uint32_t>(e.children.size()) - 1)(rng);
  Path p{head};
  NodeId cur = e.children[head];
  while (std::bernoulli_distribution(0.4)(rng)) {
    if (s.kind(cur) != NodeKind::Plain || cur == kBottom) break;
    auto es = s.edges(cur);
    const Edge& pick =
        es[std::uniform_int_distribution<size_t>(0, es.size() - 1)(rng)];
    if (pick.children.empty()) break;
    uint32_t i = std::uniform_int_distribution<uint32_t>(
        0, static_cast<uint32_t>(pick.children.size()) - 1)(rng);
    p.push_back(i);
    cur = pick.children[i];
  }
  return p;
}

}  // namespace

NodeId random_acyclic_ecta(NodeStore& s, std::mt19937_64& rng,
                           const RandomEctaOptions& opts) {
  std::vector<SymbolId> pool;
  for (const SymDesc& d : kPool) {
    pool.push_back(s.symbols().intern(d.name, d.arity));
  }

  uint32_t n_nodes =
      std::uniform_int_distribution<uint32_t>(1, opts.max_nodes)(rng);
  std::vector<NodeId> built;
  for (uint32_t i = 0; i < n_nodes; ++i) {
    uint32_t n_edges =
        std::uniform_int_distribution<uint32_t>(1, opts.max_edges_per_node)(rng);
    std::vector<Edge> edges;
    for (uint32_t k = 0; k < n_edges; ++k) {
      SymbolId sym;
      do {
        sym = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
      } while (i == 0 && s.symbols()[sym].arity > 0);
      uint32_t arity = s.symbols()[sym].arity;
      std::vector<NodeId> kids;
      for (uint32_t c = 0; c < arity; ++c) {
        kids.push_back(
            built[std::uniform_int_distribution<size_t>(0, built.size() - 1)(rng)]);
      }
      std::optional<Edge> e;
      if (arity > 0 && std::bernoulli_distribution(opts.constrain_prob)(rng)) {
        Edge probe = *s.mk_edge(sym, kids, Pcs{});
        uint32_t n_pecs =
            std::uniform_int_distribution<uint32_t>(1, opts.max_pecs_per_edge)(rng);
        std::vector<Pec> pecs;
        for (uint32_t j = 0; j < n_pecs; ++j) {
          size_t width = std::bernoulli_distribution(0.2)(rng) ? 3 : 2;
          std::vector<Path> paths;
          for (size_t w = 0; w < width; ++w) {
            paths.push_back(random_path(s, rng, probe));
          }
          std::sort(paths.begin(), paths.end());
          paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
          if (paths.size() >= 2) pecs.push_back(Pec(std::move(paths)));
        }
        e = s.mk_edge(sym, kids, Pcs(std::move(pecs)));
      }
      if (!e) e = s.mk_edge(sym, kids, Pcs{});
      edges.push_back(std::move(*e));
    }
    built.push_back(s.mk_node(std::move(edges)));
  }
  return built.back();
}

}  // namespace ecta
