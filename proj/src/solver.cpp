#include "mwis/solver.hpp"

#include <chrono>

#include "mwis/bounds.hpp"

namespace mwis {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const WeightedGraph& g, const SolverOptions& options)
      : g_(g), options_(options), start_(Clock::now()) {
    g_.clear_history();
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(options.time_limit));
    reduce_ = options.reduce;
    if (!reduce_.deadline || *reduce_.deadline > deadline_) reduce_.deadline = deadline_;
  }

  SolverReport run() {
    report_.optimal = true;
    node(ConstraintStore{});
    report_.elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    return report_;
  }

 private:
  bool out_of_time() {
    if (Clock::now() >= deadline_) report_.optimal = false;
    return !report_.optimal;
  }

  void node(ConstraintStore store) {
    if (out_of_time()) return;
    ++report_.nodes;
    const auto graph_mark = g_.checkpoint();
    const auto trace_mark = trace_.checkpoint();
    explore(store);
    g_.rollback(graph_mark);
    trace_.rollback(trace_mark);
  }

  void explore(ConstraintStore& store) {
    for (;;) {
      const std::size_t before = trace_.size();
      reduce_in_place(g_, trace_, reduce_);
      if (!options_.constraints) break;
      for (std::size_t i = before; i < trace_.size(); ++i) store.apply(trace_.events()[i]);
      const auto status = check_constraints(g_, store, trace_);
      if (status == ConstraintStatus::Pruned) {
        ++report_.prunes_constraint;
        return;
      }
      if (status == ConstraintStatus::Clean) break;
      ++report_.simplifications;
    }

    const Weight offset = trace_.offset();
    const auto greedy = greedy_lower_bound(g_);
    if (!have_solution_ || offset + greedy.weight > report_.best_weight) {
      report_.best_weight = offset + greedy.weight;
      report_.solution = reconstruct_solution(g_, trace_, greedy.set);
      have_solution_ = true;
    }
    if (g_.empty()) return;
    if (offset + clique_cover_upper_bound(g_) <= report_.best_weight) {
      ++report_.prunes_bound;
      return;
    }

    const VertexId v = pick_branch_vertex(g_);
    VertexList include_set = {v};
    VertexList exclude_set = {v};
    bool include_branch = true;
    if (options_.branching == Branching::Confining) {
      const auto confining = compute_confining(g_, v, reduce_.budget);
      include_branch = confining.confined;
      if (include_branch) {
        include_set = confining.set;
        exclude_set = inferred_covering(g_, v, reduce_.budget);
      }
    }

    if (include_branch) {
      ConstraintStore child = store;
      const auto mark = g_.checkpoint();
      const auto tmark = trace_.checkpoint();
      if (options_.constraints) {
        for (auto& c : make_include_constraints(g_, v)) child.add(std::move(c));
      }
      for (VertexId s : include_set) {
        include_vertex(g_, trace_, s);
        if (options_.constraints) child.apply(trace_.events().back());
      }
      node(std::move(child));
      g_.rollback(mark);
      trace_.rollback(tmark);
    }

    if (out_of_time()) return;
    {
      ConstraintStore child = store;
      const auto mark = g_.checkpoint();
      const auto tmark = trace_.checkpoint();
      if (options_.constraints && include_branch && g_.degree(v) > 0) {
        child.add(make_exclude_constraint(g_, v, false));
      }
      for (VertexId s : exclude_set) {
        exclude_vertex(g_, trace_, s);
        if (options_.constraints) child.apply(trace_.events().back());
      }
      node(std::move(child));
      g_.rollback(mark);
      trace_.rollback(tmark);
    }
  }

  WeightedGraph g_;
  ReductionTrace trace_;
  const SolverOptions& options_;
  ReduceOptions reduce_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  SolverReport report_;
  bool have_solution_ = false;
};

}  // namespace

VertexId pick_branch_vertex(const WeightedGraph& g) {
  VertexId best = kNoVertex;
  for (VertexId v : g.alive_vertices()) {
    if (best == kNoVertex || g.degree(v) > g.degree(best) ||
        (g.degree(v) == g.degree(best) && g.weight(v) > g.weight(best))) {
      best = v;
    }
  }
  return best;
}

SolverReport solve(const WeightedGraph& g, const SolverOptions& options) {
  Search search(g, options);
  return search.run();
}

}  // namespace mwis
