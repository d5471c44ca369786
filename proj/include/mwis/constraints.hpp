#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwis/reduction_trace.hpp"

namespace mwis {

// Σ coef(z)·x_z < rhs over exclusion indicators: x_z = 1 means z ends up
// outside the independent set, x_z = 0 means inside.
struct PackingConstraint {
  std::vector<std::pair<VertexId, Weight>> terms;
  Weight rhs = 0;
  bool strict = true;  // false reads Σ ≤ rhs

  // Smallest excluded weight that violates the constraint.
  Weight limit() const { return strict ? rhs : rhs + 1; }
};

// One constraint per u ∈ N(v) with w(u) >= w(v) and N(u)\N[v] non-empty:
// terms N(u)\N[v], rhs = w(N(u)\N[v]) - (w(u) - w(v)).
std::vector<PackingConstraint> make_include_constraints(const WeightedGraph& g, VertexId v);

// terms N(v), rhs = w(N(v)) - w(v). The search uses the non-strict form
// (strict = false); see solve(). Throws DegenerateConstraint when N(v) is empty.
PackingConstraint make_exclude_constraint(const WeightedGraph& g, VertexId v, bool strict = true);

class ConstraintStore {
 public:
  void add(PackingConstraint c);

  // z joined the solution: its term is dropped, rhs kept.
  void update_on_include(VertexId z);
  // z left the graph without joining: its term is dropped and rhs lowered by its coefficient.
  void update_on_exclude(VertexId z);
  // Forgets every constraint mentioning z.
  void drop_containing(VertexId z);

  // Routes a graph event to the updates above. Contraction members and both
  // ends of a pendant fold invalidate the constraints that mention them.
  void apply(const ReductionEvent& event);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::size_t capacity() const noexcept { return list_.size(); }
  bool alive(std::size_t i) const noexcept { return alive_[i] != 0; }
  const PackingConstraint& at(std::size_t i) const { return list_[i]; }
  void kill(std::size_t i) { alive_[i] = 0; }

  // Alive constraints, for inspection and tests.
  std::vector<PackingConstraint> alive_constraints() const;

 private:
  template <class F>
  void for_each_with(VertexId z, F&& f);

  std::vector<PackingConstraint> list_;
  std::vector<char> alive_;
  std::unordered_map<VertexId, std::vector<std::uint32_t>> index_;
};

enum class ConstraintStatus { Pruned, Simplified, Clean };

// Applies the constraint cases until a pass changes nothing:
// (a) rhs <= 0 prunes;
// (b) rhs <= every coefficient forces all term vertices into the solution,
//     pruning if they are not independent, and adds the matching constraints
//     for heavy vertices around them;
// (c) a vertex whose included neighbors alone would reach rhs is excluded,
//     with a non-strict constraint on its own neighborhood.
// Graph changes go through `trace` and are fed back into `store`.
ConstraintStatus check_constraints(WeightedGraph& g, ConstraintStore& store,
                                   ReductionTrace& trace);

}  // namespace mwis
