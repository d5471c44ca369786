#pragma once

// Brute-force reference answers for tests. Deliberately naive: enumerates every
// independent set of the alive graph by plain recursion, no pruning.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "mwis/graph.hpp"

namespace oracle {

using mwis::VertexId;
using mwis::VertexList;
using mwis::Weight;
using mwis::WeightedGraph;

inline void for_each_independent_set(const WeightedGraph& g,
                                      const std::function<void(const VertexList&, Weight)>& visit) {
  const VertexList order = g.alive_vertices();
  VertexList chosen;
  std::vector<int> blocked(g.id_bound(), 0);
  std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight w) {
    if (i == order.size()) {
      visit(chosen, w);
      return;
    }
    rec(i + 1, w);
    const VertexId v = order[i];
    if (blocked[v]) return;
    chosen.push_back(v);
    for (VertexId u : g.neighbors(v)) ++blocked[u];
    rec(i + 1, w + g.weight(v));
    for (VertexId u : g.neighbors(v)) --blocked[u];
    chosen.pop_back();
  };
  rec(0, 0);
}

inline Weight alpha(const WeightedGraph& g) {
  Weight best = 0;
  for_each_independent_set(g, [&](const VertexList&, Weight w) { best = std::max(best, w); });
  return best;
}

// All maximum-weight independent sets, each sorted ascending.
inline std::vector<VertexList> all_mwis(const WeightedGraph& g) {
  const Weight best = alpha(g);
  std::vector<VertexList> out;
  for_each_independent_set(g, [&](const VertexList& s, Weight w) {
    if (w == best) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Complement of each MWIS within the alive vertices: the minimum weight covers.
inline std::vector<VertexList> all_mwvc(const WeightedGraph& g) {
  const VertexList alive = g.alive_vertices();
  std::vector<VertexList> out;
  for (const auto& s : all_mwis(g)) {
    VertexList c;
    std::set_difference(alive.begin(), alive.end(), s.begin(), s.end(), std::back_inserter(c));
    out.push_back(std::move(c));
  }
  return out;
}

inline bool contains(const VertexList& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool subset(VertexList a, const VertexList& sorted) {
  return std::all_of(a.begin(), a.end(), [&](VertexId v) { return contains(sorted, v); });
}

// α after deleting `removed` from a copy of g.
inline Weight alpha_without(const WeightedGraph& g, const VertexList& removed) {
  WeightedGraph h = g;
  for (VertexId v : removed) {
    if (h.contains(v)) h.remove_vertex(v);
  }
  return alpha(h);
}

inline WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, Weight lo,
                                  Weight hi) {
  std::uniform_int_distribution<Weight> wd(lo, hi);
  std::bernoulli_distribution ed(p);
  std::vector<Weight> weights(n);
  for (auto& w : weights) w = wd(rng);
  std::vector<mwis::Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (ed(rng)) edges.emplace_back(u, v);
    }
  }
  return WeightedGraph::from_edges(std::move(weights), edges);
}

// Path on weights.size() vertices, ids 0..n-1 in order.
inline WeightedGraph path(std::vector<Weight> weights) {
  std::vector<mwis::Edge> edges;
  for (VertexId v = 0; v + 1 < weights.size(); ++v) edges.emplace_back(v, v + 1);
  return WeightedGraph::from_edges(std::move(weights), edges);
}

inline WeightedGraph clique(std::vector<Weight> weights) {
  std::vector<mwis::Edge> edges;
  for (VertexId u = 0; u < weights.size(); ++u) {
    for (VertexId v = u + 1; v < weights.size(); ++v) edges.emplace_back(u, v);
  }
  return WeightedGraph::from_edges(std::move(weights), edges);
}

inline WeightedGraph cycle(std::vector<Weight> weights) {
  std::vector<mwis::Edge> edges;
  const VertexId n = static_cast<VertexId>(weights.size());
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return WeightedGraph::from_edges(std::move(weights), edges);
}

// 12-vertex instance (a..l = 0..11) whose inferred confining set of a and
// inferred covering set of d follow the worked figure.
inline WeightedGraph twelve_vertex_graph() {
  enum : VertexId { a, b, c, d, e, f, g, h, i, j, k, l };
  const std::vector<mwis::Edge> edges = {{a, b}, {b, c}, {a, l}, {c, d}, {d, e},
                                         {d, j}, {e, f}, {f, g}, {f, h}, {i, j},
                                         {i, k}, {f, i}, {i, l}, {k, l}};
  return WeightedGraph::from_edges({4, 5, 4, 10, 4, 9, 4, 4, 5, 4, 5, 1}, edges);
}

}  // namespace oracle
