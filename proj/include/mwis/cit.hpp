#pragma once

#include <span>

#include "mwis/graph.hpp"
#include "mwis/subsolve.hpp"

namespace mwis {

struct CitBudget {
  SubsolveBudget subsolve;
  std::size_t max_satellite_ground = 12;  // |N(u)\N[S]| cap when that set is not independent
  std::size_t max_set_growth = 64;        // confining/covering sets stop growing at this size
};

enum class SatelliteStatus { Unique, NotUnique, NoneSatisfies, BudgetExceeded };

struct SatelliteResult {
  SatelliteStatus status = SatelliteStatus::NoneSatisfies;
  VertexList satellite;  // filled when Unique
};

// Satellite of the independent set S through u. With W = N(u)\N[S] and
// t = w(u) - w(S∩N(u)), a subset T of W satisfies when w(T) > t (strict) or
// w(T) >= t (inferred). Unique when exactly one independent T satisfies.
// Throws InvalidArgument when u is not a child (strict) / inferred child.
SatelliteResult satellite_of(const WeightedGraph& g, std::span<const VertexId> S, VertexId u,
                             bool strict, const CitBudget& budget = {});

struct ConfiningOutcome {
  bool confined = false;
  VertexList set;  // the confining set, sorted; empty when unconfined
};

struct CoveringOutcome {
  bool covered = false;
  VertexList set;  // the covering set, sorted; empty when uncovered
};

ConfiningOutcome compute_confining(const WeightedGraph& g, VertexId v, const CitBudget& budget = {});

// Mirrors of father v with respect to C: u in N²(v)\C with
// w(v) >= α(N(v)\(C∪N(u))) (strict) or w(v) > α(...) (inferred).
// Throws InvalidArgument when v is not in C.
VertexList mirrors_of(const WeightedGraph& g, std::span<const VertexId> C, VertexId v, bool strict,
                      const CitBudget& budget = {});

CoveringOutcome compute_covering(const WeightedGraph& g, VertexId v, const CitBudget& budget = {});

VertexList inferred_confining(const WeightedGraph& g, VertexId v, const CitBudget& budget = {});
VertexList inferred_covering(const WeightedGraph& g, VertexId v, const CitBudget& budget = {});

bool confining_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                            const CitBudget& budget = {});
// Reuses an already computed outcome for v.
bool confining_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                            const ConfiningOutcome& of_v, const CitBudget& budget = {});

// Throws AdjacentPair when u and v are adjacent.
bool covering_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                           const CitBudget& budget = {});
bool covering_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                           const CoveringOutcome& of_v, const CitBudget& budget = {});

}  // namespace mwis
