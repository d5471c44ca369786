#pragma once

#include "mwis/constraints.hpp"
#include "mwis/reduce.hpp"

namespace mwis {

enum class Branching { Confining, Plain };

struct SolverOptions {
  double time_limit = 1000;  // seconds
  bool constraints = true;
  Branching branching = Branching::Confining;
  ReduceOptions reduce;
};

struct SolverReport {
  Weight best_weight = 0;
  VertexList solution;  // ids of the input graph, ascending
  bool optimal = false;
  std::size_t nodes = 0;
  std::size_t prunes_bound = 0;
  std::size_t prunes_constraint = 0;
  std::size_t simplifications = 0;
  double elapsed = 0;  // seconds
};

// Branch and reduce. The include branch takes the confining set of the
// branch vertex, the exclude branch drops its inferred covering set.
// Exclude-side constraints are added in their non-strict form.
SolverReport solve(const WeightedGraph& g, const SolverOptions& options = {});

// Max degree, then larger weight, then smaller id. kNoVertex on an empty graph.
VertexId pick_branch_vertex(const WeightedGraph& g);

}  // namespace mwis
