#pragma once

#include <span>
#include <variant>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

// v joined the solution; `removed` is the then-alive N(v) deleted with it.
struct IncludeVertex {
  VertexId vertex;
  Weight weight;
  VertexList removed;
};

// v was deleted without affecting the optimum.
struct ExcludeVertex {
  VertexId vertex;
};

// Pairwise non-adjacent members merged into `merged` with w(merged) = w(members).
struct ContractSet {
  VertexList members;
  VertexId merged;
};

// Weighted pendant fold: `pendant` (weight `weight`) removed, w(neighbor)
// lowered by the same amount and `weight` added to the offset. The pendant is
// taken back exactly when `neighbor` is absent from the final solution.
struct FoldPendant {
  VertexId pendant;
  VertexId neighbor;
  Weight weight;
};

using ReductionEvent = std::variant<IncludeVertex, ExcludeVertex, ContractSet, FoldPendant>;

// Ordered log of reduction events. `offset` is the weight already committed
// to the solution.
class ReductionTrace {
 public:
  struct Mark {
    std::size_t events;
    Weight offset;
  };

  const std::vector<ReductionEvent>& events() const noexcept { return events_; }
  Weight offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return events_.size(); }

  void push(ReductionEvent event);

  Mark checkpoint() const noexcept { return {events_.size(), offset_}; }
  void rollback(Mark mark);

 private:
  std::vector<ReductionEvent> events_;
  Weight offset_ = 0;
};

// Graph events. Each mutates `g` and appends to `trace`.
void include_vertex(WeightedGraph& g, ReductionTrace& trace, VertexId v);
void exclude_vertex(WeightedGraph& g, ReductionTrace& trace, VertexId v);
VertexId contract_set(WeightedGraph& g, ReductionTrace& trace,
                      std::span<const VertexId> members);
// Requires v to be a pendant whose neighbor is strictly heavier.
void fold_pendant(WeightedGraph& g, ReductionTrace& trace, VertexId v);

// Maps an independent set of the current (kernel) graph back to the original
// graph by replaying `trace` newest-first. The result is sorted and has weight
// w(kernel_solution) + trace.offset().
VertexList reconstruct_solution(const WeightedGraph& kernel,
                                const ReductionTrace& trace,
                                std::span<const VertexId> kernel_solution);

}  // namespace mwis
