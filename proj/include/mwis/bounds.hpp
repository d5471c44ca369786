#pragma once

#include "mwis/graph.hpp"

namespace mwis {

struct GreedyResult {
  Weight weight = 0;
  VertexList set;  // ascending ids
};

// Repeatedly takes the alive vertex maximizing w(v)/(d(v)+1) (ties: larger
// weight, then smaller id) and deletes its closed neighborhood.
GreedyResult greedy_lower_bound(const WeightedGraph& g);

// Greedy clique partition in descending weight order (ties: smaller id); each
// vertex joins the first earlier clique it is fully adjacent to. Returns the
// sum of clique maxima, which is at least α_w(g).
Weight clique_cover_upper_bound(const WeightedGraph& g);

}  // namespace mwis
