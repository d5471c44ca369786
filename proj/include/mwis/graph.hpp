#pragma once

#include <cstddef>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "mwis/types.hpp"

namespace mwis {

using Edge = std::pair<VertexId, VertexId>;

// Mutable vertex-weighted undirected graph.
//
// Removed vertices stay in the adjacency lists and are only flagged dead;
// neighbors() filters them out. Every mutation is recorded in an undo log so
// callers can take a checkpoint() and later rollback() to it.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Edgeless graph on weights.size() vertices.
  explicit WeightedGraph(std::vector<Weight> weights);

  // Builds a graph from an edge list over 0-based ids. Parallel edges are
  // merged; self-loops and out-of-range endpoints throw MalformedInput;
  // non-positive weights throw ZeroWeight.
  static WeightedGraph from_edges(std::vector<Weight> weights,
                                  std::span<const Edge> edges);

  // Number of ids ever allocated, dead ones included.
  std::size_t id_bound() const noexcept { return weights_.size(); }
  std::size_t alive_count() const noexcept { return alive_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return alive_count_ == 0; }

  bool contains(VertexId v) const noexcept {
    return v < weights_.size() && alive_[v];
  }
  bool alive(VertexId v) const noexcept { return alive_[v] != 0; }
  Weight weight(VertexId v) const noexcept { return weights_[v]; }
  std::size_t degree(VertexId v) const noexcept { return degree_[v]; }

  // Alive neighbors of v in ascending id order.
  auto neighbors(VertexId v) const {
    return std::span<const VertexId>(adjacency_[v]) |
           std::views::filter([this](VertexId u) { return alive_[u] != 0; });
  }

  // Raw adjacency including dead entries, ascending.
  std::span<const VertexId> raw_neighbors(VertexId v) const noexcept {
    return adjacency_[v];
  }

  bool adjacent(VertexId u, VertexId v) const;

  VertexList alive_vertices() const;
  VertexList neighbor_list(VertexId v) const;
  Weight total_weight() const;
  Weight neighborhood_weight(VertexId v) const;

  // Mutations. All of them are undo-logged.
  void remove_vertex(VertexId v);
  VertexId add_vertex(Weight w, std::span<const VertexId> neighbors);
  void set_weight(VertexId v, Weight w);

  std::size_t checkpoint() const noexcept { return undo_.size(); }
  void rollback(std::size_t mark);

  // Drops the undo history; existing checkpoints become invalid.
  void clear_history() { undo_.clear(); }

  // Checks symmetry, sortedness and cached counters. Test helper.
  bool check_invariants() const;

 private:
  enum class UndoKind : std::uint8_t { Remove, Add, SetWeight };
  struct UndoEntry {
    UndoKind kind;
    VertexId vertex;
    Weight old_weight;
  };

  void require_alive(VertexId v) const;

  std::vector<Weight> weights_;
  std::vector<VertexList> adjacency_;
  std::vector<char> alive_;
  std::vector<std::size_t> degree_;
  std::size_t edge_count_ = 0;
  std::size_t alive_count_ = 0;
  std::vector<UndoEntry> undo_;
};

// Alive vertices at distance exactly two from v.
VertexList second_neighborhood(const WeightedGraph& g, VertexId v);

// Sum of weights over a vertex set.
Weight weight_of(const WeightedGraph& g, std::span<const VertexId> set);

bool is_independent(const WeightedGraph& g, std::span<const VertexId> set);

// Every edge between alive vertices has an endpoint in `cover`.
bool is_vertex_cover(const WeightedGraph& g, std::span<const VertexId> cover);

}  // namespace mwis
