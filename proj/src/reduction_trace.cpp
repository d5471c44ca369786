#include "mwis/reduction_trace.hpp"

#include <algorithm>
#include <string>

namespace mwis {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_alive(const WeightedGraph& g, VertexId v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::DeadVertex, "vertex " + std::to_string(v) + " is not alive");
  }
}

}  // namespace

void ReductionTrace::push(ReductionEvent event) {
  std::visit(overloaded{
                 [this](const IncludeVertex& e) { offset_ += e.weight; },
                 [this](const FoldPendant& e) { offset_ += e.weight; },
                 [](const auto&) {},
             },
             event);
  events_.push_back(std::move(event));
}

void ReductionTrace::rollback(Mark mark) {
  events_.resize(mark.events);
  offset_ = mark.offset;
}

void include_vertex(WeightedGraph& g, ReductionTrace& trace, VertexId v) {
  require_alive(g, v);
  IncludeVertex event{v, g.weight(v), g.neighbor_list(v)};
  for (VertexId u : event.removed) g.remove_vertex(u);
  g.remove_vertex(v);
  trace.push(std::move(event));
}

void exclude_vertex(WeightedGraph& g, ReductionTrace& trace, VertexId v) {
  require_alive(g, v);
  g.remove_vertex(v);
  trace.push(ExcludeVertex{v});
}

VertexId contract_set(WeightedGraph& g, ReductionTrace& trace,
                      std::span<const VertexId> members) {
  if (members.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "contraction needs at least two vertices");
  }
  for (VertexId v : members) require_alive(g, v);
  VertexList sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate vertex in contraction set");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) {
        throw Error(ErrorCode::AdjacentMembers,
                    "vertices " + std::to_string(sorted[i]) + " and " +
                        std::to_string(sorted[j]) + " are adjacent");
      }
    }
  }

  Weight total = 0;
  VertexList outside;
  for (VertexId v : sorted) {
    total += g.weight(v);
    for (VertexId u : g.neighbors(v)) {
      if (!std::binary_search(sorted.begin(), sorted.end(), u)) outside.push_back(u);
    }
  }
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());

  for (VertexId v : sorted) g.remove_vertex(v);
  const VertexId merged = g.add_vertex(total, outside);
  trace.push(ContractSet{std::move(sorted), merged});
  return merged;
}

void fold_pendant(WeightedGraph& g, ReductionTrace& trace, VertexId v) {
  require_alive(g, v);
  if (g.degree(v) != 1) {
    throw Error(ErrorCode::InvalidArgument, "fold_pendant needs a degree-one vertex");
  }
  const VertexId u = *g.neighbors(v).begin();
  const Weight wv = g.weight(v);
  if (wv >= g.weight(u)) {
    throw Error(ErrorCode::InvalidArgument, "pendant is not lighter than its neighbor");
  }
  g.set_weight(u, g.weight(u) - wv);
  g.remove_vertex(v);
  trace.push(FoldPendant{v, u, wv});
}

VertexList reconstruct_solution(const WeightedGraph& kernel,
                                const ReductionTrace& trace,
                                std::span<const VertexId> kernel_solution) {
  std::vector<char> in(kernel.id_bound(), 0);
  for (VertexId v : kernel_solution) {
    if (!kernel.contains(v)) {
      throw Error(ErrorCode::InvalidKernelSolution,
                  "vertex " + std::to_string(v) + " is not in the kernel");
    }
    if (in[v]) {
      throw Error(ErrorCode::InvalidKernelSolution,
                  "vertex " + std::to_string(v) + " listed twice");
    }
    in[v] = 1;
  }
  for (VertexId v : kernel_solution) {
    for (VertexId u : kernel.neighbors(v)) {
      if (in[u]) {
        throw Error(ErrorCode::InvalidKernelSolution,
                    "vertices " + std::to_string(v) + " and " + std::to_string(u) +
                        " are adjacent");
      }
    }
  }

  const auto& events = trace.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    std::visit(overloaded{
                   [&](const IncludeVertex& e) { in[e.vertex] = 1; },
                   [](const ExcludeVertex&) {},
                   [&](const ContractSet& e) {
                     if (in[e.merged]) {
                       in[e.merged] = 0;
                       for (VertexId m : e.members) in[m] = 1;
                     }
                   },
                   [&](const FoldPendant& e) {
                     if (!in[e.neighbor]) in[e.pendant] = 1;
                   },
               },
               *it);
  }

  VertexList out;
  for (VertexId v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace mwis
