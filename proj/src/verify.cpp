#include "mwis/verify.hpp"

#include <algorithm>
#include <string>

namespace mwis {

VerifyReport verify_solution(const WeightedGraph& g, std::span<const VertexId> solution,
                             VertexId label_base) {
  auto label = [&](VertexId v) { return std::to_string(std::uint64_t{v} + label_base); };
  VertexList set(solution.begin(), solution.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : set) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::UnknownVertex, "unknown vertex " + label(v));
    }
    in[v] = 1;
  }
  for (VertexId u : set) {
    for (VertexId v : g.neighbors(u)) {
      if (v > u && in[v]) {
        throw Error(ErrorCode::NotIndependent,
                    "vertices " + label(u) + " and " + label(v) + " are adjacent");
      }
    }
  }
  VerifyReport r;
  r.size = set.size();
  r.weight = weight_of(g, set);
  r.cover_weight = g.total_weight() - r.weight;
  VertexList cover;
  for (VertexId v : g.alive_vertices()) {
    if (!in[v]) cover.push_back(v);
  }
  r.cover_valid = is_vertex_cover(g, cover);
  return r;
}

}  // namespace mwis
