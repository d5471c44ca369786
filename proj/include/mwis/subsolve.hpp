#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

struct SubsolveBudget {
  std::size_t max_vertices = 16;  // hard ceiling of 64 (bitmask representation)
  std::size_t max_subsets = 4096;
};

struct SubsolveResult {
  Weight weight = 0;
  VertexList witness;  // ascending ids
};

// Exact MWIS of G[vertices]. nullopt means CapExceeded. The witness is the
// lexicographically smallest maximum-weight set in ascending id order.
// Throws DeadVertex if a listed vertex is not alive; duplicates are ignored.
std::optional<SubsolveResult> mwis_exact(const WeightedGraph& g,
                                         std::span<const VertexId> vertices,
                                         const SubsolveBudget& budget = {});

// Same as mwis_exact but returns only the weight.
std::optional<Weight> mwis_weight(const WeightedGraph& g,
                                  std::span<const VertexId> vertices,
                                  const SubsolveBudget& budget = {});

// Every maximum-weight independent set of G[vertices], in lexicographic order.
// nullopt when the vertex cap is exceeded or more than max_subsets sets exist.
std::optional<std::vector<VertexList>> enumerate_all_mwis(const WeightedGraph& g,
                                                          std::span<const VertexId> vertices,
                                                          const SubsolveBudget& budget = {});

// Whole-graph conveniences over the alive vertices.
std::optional<SubsolveResult> mwis_exact(const WeightedGraph& g, const SubsolveBudget& budget = {});
std::optional<std::vector<VertexList>> enumerate_all_mwis(const WeightedGraph& g,
                                                          const SubsolveBudget& budget = {});

}  // namespace mwis
