#include "mwis/reduce.hpp"

#include <algorithm>
#include <deque>

namespace mwis {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class BasicRules {
 public:
  BasicRules(WeightedGraph& g, ReductionTrace& trace, RuleStats* stats)
      : g_(g), trace_(trace), stats_(stats), queued_(g.id_bound(), 0), mark_(g.id_bound(), 0) {}

  bool run() {
    for (VertexId v : g_.alive_vertices()) push(v);
    bool changed = false;
    while (!queue_.empty()) {
      const VertexId v = queue_.front();
      queue_.pop_front();
      queued_[v] = 0;
      if (g_.contains(v) && apply(v)) changed = true;
    }
    return changed;
  }

 private:
  void push(VertexId v) {
    if (!queued_[v]) {
      queued_[v] = 1;
      queue_.push_back(v);
    }
  }

  // Queues every alive vertex within distance two of the given ones.
  void touch_around(const VertexList& vertices) {
    for (VertexId x : vertices) {
      for (VertexId y : g_.neighbors(x)) {
        push(y);
        for (VertexId z : g_.neighbors(y)) push(z);
      }
    }
  }

  void include(VertexId v) {
    VertexList gone = g_.neighbor_list(v);
    if (stats_) {
      stats_->included += 1;
      stats_->removed += gone.size();
    }
    include_vertex(g_, trace_, v);
    touch_around_dead(gone);
  }

  // Dead vertices keep their raw adjacency, which is what we walk here.
  void touch_around_dead(const VertexList& dead) {
    for (VertexId x : dead) {
      for (VertexId y : g_.raw_neighbors(x)) {
        if (!g_.alive(y)) continue;
        push(y);
        for (VertexId z : g_.neighbors(y)) push(z);
      }
    }
  }

  bool apply(VertexId v) {
    const std::size_t deg = g_.degree(v);
    if (deg == 0) {
      include(v);
      return true;
    }
    if (g_.weight(v) >= g_.neighborhood_weight(v)) {
      include(v);
      return true;
    }
    if (deg == 1) {
      const VertexId u = *g_.neighbors(v).begin();
      fold_pendant(g_, trace_, v);
      if (stats_) stats_->removed += 1;
      push(u);
      for (VertexId z : g_.neighbors(u)) push(z);
      return true;
    }
    // Domination: u ∈ N(v), N[v] ⊆ N[u], w(u) <= w(v) ⇒ exclude u.
    mark_[v] = 1;
    for (VertexId x : g_.neighbors(v)) mark_[x] = 1;
    VertexId dominated = kNoVertex;
    for (VertexId u : g_.neighbors(v)) {
      if (g_.weight(u) > g_.weight(v) || g_.degree(u) < deg) continue;
      std::size_t hits = 1;  // u itself
      for (VertexId x : g_.neighbors(u)) hits += mark_[x];
      if (hits == deg + 1) {
        dominated = u;
        break;
      }
    }
    mark_[v] = 0;
    for (VertexId x : g_.neighbors(v)) mark_[x] = 0;
    if (dominated == kNoVertex) return false;
    exclude_vertex(g_, trace_, dominated);
    if (stats_) stats_->removed += 1;
    touch_around_dead({dominated});
    push(v);
    return true;
  }

  WeightedGraph& g_;
  ReductionTrace& trace_;
  RuleStats* stats_;
  std::deque<VertexId> queue_;
  std::vector<char> queued_;
  std::vector<char> mark_;
};

enum class CitStep { Confining, Covering };

bool cit_at(WeightedGraph& g, ReductionTrace& trace, VertexId v, CitStep step,
            const CitBudget& budget, RuleStats* stats) {
  if (step == CitStep::Confining) {
    const auto conf = compute_confining(g, v, budget);
    if (!conf.confined) {
      exclude_vertex(g, trace, v);
      if (stats) stats->removed += 1;
      return true;
    }
    for (VertexId u : conf.set) {
      if (u != v && confining_simultaneous(g, u, v, conf, budget)) {
        const VertexList pair = {u, v};
        contract_set(g, trace, pair);
        if (stats) stats->contracted += 1;
        return true;
      }
    }
    return false;
  }
  const auto cov = compute_covering(g, v, budget);
  if (!cov.covered) {
    if (stats) {
      stats->included += 1;
      stats->removed += g.degree(v);
    }
    include_vertex(g, trace, v);
    return true;
  }
  for (VertexId u : cov.set) {
    if (u != v && !g.adjacent(u, v) && covering_simultaneous(g, u, v, cov, budget)) {
      const VertexList pair = {u, v};
      contract_set(g, trace, pair);
      if (stats) stats->contracted += 1;
      return true;
    }
  }
  return false;
}

// Cyclic sweep over the id space that resumes where the last change happened.
// Reports no change only after a full cycle without one.
class CitSweep {
 public:
  explicit CitSweep(CitStep step) : step_(step) {}

  bool run(WeightedGraph& g, ReductionTrace& trace, const ReduceOptions& options,
           RuleStats* stats) {
    const auto start = Clock::now();
    bool changed = false;
    const std::size_t bound = g.id_bound();
    for (std::size_t scanned = 0; scanned < bound && !changed; ++scanned) {
      if (options.deadline && Clock::now() > *options.deadline) break;
      const VertexId v = static_cast<VertexId>((cursor_ + scanned) % bound);
      if (!g.contains(v)) continue;
      if (cit_at(g, trace, v, step_, options.budget, stats)) {
        changed = true;
        cursor_ = v + 1;
      }
    }
    if (stats) stats->millis += millis_since(start);
    return changed;
  }

 private:
  CitStep step_;
  std::size_t cursor_ = 0;
};

bool full_sweep(WeightedGraph& g, ReductionTrace& trace, CitStep step, const CitBudget& budget,
                RuleStats* stats) {
  const auto start = Clock::now();
  bool changed = false;
  // Ids appended by contractions during the sweep are visited too.
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (g.contains(v) && cit_at(g, trace, v, step, budget, stats)) changed = true;
  }
  if (stats) stats->millis += millis_since(start);
  return changed;
}

}  // namespace

void disable_step(ReduceOptions& options, const std::string& name) {
  if (name == "basic") {
    options.basic = false;
  } else if (name == "confining") {
    options.confining = false;
  } else if (name == "covering") {
    options.covering = false;
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown step '" + name + "' (expected basic, confining or covering)");
  }
}

bool apply_basic_rules(WeightedGraph& g, ReductionTrace& trace, RuleStats* stats) {
  const auto start = Clock::now();
  const bool changed = BasicRules(g, trace, stats).run();
  if (stats) stats->millis += millis_since(start);
  return changed;
}

bool remove_unconfined_contract_confining(WeightedGraph& g, ReductionTrace& trace,
                                          const CitBudget& budget, RuleStats* stats) {
  return full_sweep(g, trace, CitStep::Confining, budget, stats);
}

bool remove_uncovered_contract_covering(WeightedGraph& g, ReductionTrace& trace,
                                        const CitBudget& budget, RuleStats* stats) {
  return full_sweep(g, trace, CitStep::Covering, budget, stats);
}

bool reduce_in_place(WeightedGraph& g, ReductionTrace& trace, const ReduceOptions& options,
                     ReduceStats* stats) {
  CitSweep confining(CitStep::Confining);
  CitSweep covering(CitStep::Covering);
  bool any = false;
  while (true) {
    if (options.basic && apply_basic_rules(g, trace, stats ? &stats->basic : nullptr)) {
      any = true;
    }
    if (options.confining &&
        confining.run(g, trace, options, stats ? &stats->confining : nullptr)) {
      any = true;
      continue;
    }
    if (options.covering && covering.run(g, trace, options, stats ? &stats->covering : nullptr)) {
      any = true;
      continue;
    }
    return any;
  }
}

KernelResult causal_reduce(WeightedGraph g, const ReduceOptions& options) {
  KernelResult result;
  reduce_in_place(g, result.trace, options, &result.stats);
  g.clear_history();
  result.kernel = std::move(g);
  return result;
}

}  // namespace mwis
