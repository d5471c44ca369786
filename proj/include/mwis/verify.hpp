#pragma once

#include <span>

#include "mwis/graph.hpp"

namespace mwis {

struct VerifyReport {
  Weight weight = 0;             // w(solution)
  Weight cover_weight = 0;       // w(V \ solution)
  bool cover_valid = false;      // V \ solution covers every edge
  std::size_t size = 0;
};

// Throws UnknownVertex for ids outside the graph and NotIndependent naming the
// first adjacent pair (smallest u, then smallest v). Messages print id + label_base.
VerifyReport verify_solution(const WeightedGraph& g, std::span<const VertexId> solution,
                             VertexId label_base = 0);

}  // namespace mwis
