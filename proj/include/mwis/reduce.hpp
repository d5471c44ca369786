#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "mwis/cit.hpp"
#include "mwis/reduction_trace.hpp"

namespace mwis {

struct RuleStats {
  std::size_t removed = 0;     // vertices deleted without entering the solution
  std::size_t included = 0;    // vertices committed to the solution
  std::size_t contracted = 0;  // contraction operations
  double millis = 0;
};

struct ReduceStats {
  RuleStats basic;
  RuleStats confining;
  RuleStats covering;
};

struct ReduceOptions {
  CitBudget budget;
  bool basic = true;
  bool confining = true;  // Remove Unconfined & Contract Confining
  bool covering = true;   // Remove Uncovered & Contract Covering
  // CIT steps stop early once this passes; the graph stays a valid kernel.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Step names accepted by --disable-step: basic, confining, covering.
void disable_step(ReduceOptions& options, const std::string& name);

// Degree-0 inclusion, neighborhood-weight inclusion, pendant folding and
// domination, run to exhaustion.
bool apply_basic_rules(WeightedGraph& g, ReductionTrace& trace, RuleStats* stats = nullptr);

// One pass of the confining step over alive vertices in ascending id order,
// stopping at the first change.
bool remove_unconfined_contract_confining(WeightedGraph& g, ReductionTrace& trace,
                                          const CitBudget& budget = {},
                                          RuleStats* stats = nullptr);
bool remove_uncovered_contract_covering(WeightedGraph& g, ReductionTrace& trace,
                                        const CitBudget& budget = {},
                                        RuleStats* stats = nullptr);

// Runs the enabled steps to a joint fixed point in place: a later step runs
// only when every earlier one is inapplicable, and any change restarts from
// the first step. Returns true when the graph changed.
bool reduce_in_place(WeightedGraph& g, ReductionTrace& trace, const ReduceOptions& options = {},
                     ReduceStats* stats = nullptr);

struct KernelResult {
  WeightedGraph kernel;
  ReductionTrace trace;
  ReduceStats stats;

  Weight offset() const { return trace.offset(); }
};

KernelResult causal_reduce(WeightedGraph g, const ReduceOptions& options = {});

}  // namespace mwis
