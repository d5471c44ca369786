#include "mwis/bounds.hpp"

#include <algorithm>
#include <queue>

namespace mwis {

namespace {

struct Candidate {
  Weight weight;
  std::size_t degree;
  VertexId id;
};

// True when a ranks below b.
struct RanksBelow {
  bool operator()(const Candidate& a, const Candidate& b) const {
    const __int128 lhs = static_cast<__int128>(a.weight) * static_cast<__int128>(b.degree + 1);
    const __int128 rhs = static_cast<__int128>(b.weight) * static_cast<__int128>(a.degree + 1);
    if (lhs != rhs) return lhs < rhs;
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.id > b.id;
  }
};

}  // namespace

GreedyResult greedy_lower_bound(const WeightedGraph& g) {
  std::vector<char> gone(g.id_bound(), 0);
  std::vector<std::size_t> degree(g.id_bound(), 0);
  std::priority_queue<Candidate, std::vector<Candidate>, RanksBelow> heap;
  for (VertexId v : g.alive_vertices()) {
    degree[v] = g.degree(v);
    heap.push({g.weight(v), degree[v], v});
  }

  GreedyResult result;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (gone[top.id] || top.degree != degree[top.id]) continue;
    result.set.push_back(top.id);
    result.weight += top.weight;
    gone[top.id] = 1;
    VertexList removed;
    for (VertexId u : g.neighbors(top.id)) {
      if (!gone[u]) {
        gone[u] = 1;
        removed.push_back(u);
      }
    }
    for (VertexId u : removed) {
      for (VertexId x : g.neighbors(u)) {
        if (gone[x]) continue;
        --degree[x];
        heap.push({g.weight(x), degree[x], x});
      }
    }
  }
  std::sort(result.set.begin(), result.set.end());
  return result;
}

Weight clique_cover_upper_bound(const WeightedGraph& g) {
  VertexList order = g.alive_vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.weight(a) > g.weight(b); });

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> clique_of(g.id_bound(), kNone);
  std::vector<std::size_t> size;
  std::vector<Weight> heaviest;
  std::vector<std::size_t> hits;
  std::vector<std::size_t> touched;

  for (VertexId v : order) {
    for (VertexId u : g.neighbors(v)) {
      const std::size_t c = clique_of[u];
      if (c == kNone) continue;
      if (hits[c]++ == 0) touched.push_back(c);
    }
    std::size_t chosen = kNone;
    for (std::size_t c : touched) {
      if (hits[c] == size[c] && c < chosen) chosen = c;
      hits[c] = 0;
    }
    touched.clear();
    if (chosen == kNone) {
      chosen = size.size();
      size.push_back(0);
      heaviest.push_back(g.weight(v));
      hits.push_back(0);
    }
    ++size[chosen];
    clique_of[v] = chosen;
  }

  Weight total = 0;
  for (Weight w : heaviest) total += w;
  return total;
}

}  // namespace mwis
