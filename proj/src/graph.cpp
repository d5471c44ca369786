#include "mwis/graph.hpp"

#include <algorithm>
#include <string>

namespace mwis {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::DeadVertex: return "DeadVertex";
    case ErrorCode::AdjacentMembers: return "AdjacentMembers";
    case ErrorCode::InvalidKernelSolution: return "InvalidKernelSolution";
    case ErrorCode::AdjacentPair: return "AdjacentPair";
    case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorCode::NotInCover: return "NotInCover";
    case ErrorCode::EmptyCover: return "EmptyCover";
    case ErrorCode::BadBounds: return "BadBounds";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

WeightedGraph::WeightedGraph(std::vector<Weight> weights)
    : weights_(std::move(weights)),
      adjacency_(weights_.size()),
      alive_(weights_.size(), 1),
      degree_(weights_.size(), 0),
      alive_count_(weights_.size()) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] <= 0) {
      throw Error(ErrorCode::ZeroWeight,
                  "vertex " + std::to_string(v) + " has non-positive weight");
    }
  }
}

WeightedGraph WeightedGraph::from_edges(std::vector<Weight> weights,
                                        std::span<const Edge> edges) {
  WeightedGraph g(std::move(weights));
  const auto n = g.weights_.size();
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::MalformedInput,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::MalformedInput,
                  "self-loop on vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.degree_[v] = adj.size();
    g.edge_count_ += adj.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                                : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

VertexList WeightedGraph::alive_vertices() const {
  VertexList out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

VertexList WeightedGraph::neighbor_list(VertexId v) const {
  VertexList out;
  out.reserve(degree_[v]);
  for (VertexId u : neighbors(v)) out.push_back(u);
  return out;
}

Weight WeightedGraph::total_weight() const {
  Weight total = 0;
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (alive_[v]) total += weights_[v];
  }
  return total;
}

Weight WeightedGraph::neighborhood_weight(VertexId v) const {
  Weight total = 0;
  for (VertexId u : neighbors(v)) total += weights_[u];
  return total;
}

void WeightedGraph::require_alive(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::DeadVertex,
                "vertex " + std::to_string(v) + " is not alive");
  }
}

void WeightedGraph::remove_vertex(VertexId v) {
  require_alive(v);
  alive_[v] = 0;
  --alive_count_;
  edge_count_ -= degree_[v];
  for (VertexId u : adjacency_[v]) {
    if (alive_[u]) --degree_[u];
  }
  undo_.push_back({UndoKind::Remove, v, 0});
}

VertexId WeightedGraph::add_vertex(Weight w, std::span<const VertexId> neighbors) {
  if (w <= 0) throw Error(ErrorCode::ZeroWeight, "new vertex weight must be positive");
  const auto id = static_cast<VertexId>(weights_.size());
  VertexList adj(neighbors.begin(), neighbors.end());
  std::sort(adj.begin(), adj.end());
  adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  for (VertexId u : adj) require_alive(u);

  weights_.push_back(w);
  alive_.push_back(1);
  degree_.push_back(adj.size());
  for (VertexId u : adj) {
    adjacency_[u].push_back(id);
    ++degree_[u];
  }
  adjacency_.push_back(std::move(adj));
  edge_count_ += degree_[id];
  ++alive_count_;
  undo_.push_back({UndoKind::Add, id, 0});
  return id;
}

void WeightedGraph::set_weight(VertexId v, Weight w) {
  require_alive(v);
  if (w <= 0) throw Error(ErrorCode::ZeroWeight, "weight must stay positive");
  undo_.push_back({UndoKind::SetWeight, v, weights_[v]});
  weights_[v] = w;
}

void WeightedGraph::rollback(std::size_t mark) {
  while (undo_.size() > mark) {
    const UndoEntry e = undo_.back();
    undo_.pop_back();
    switch (e.kind) {
      case UndoKind::Remove: {
        alive_[e.vertex] = 1;
        ++alive_count_;
        std::size_t d = 0;
        for (VertexId u : adjacency_[e.vertex]) {
          if (alive_[u]) {
            ++degree_[u];
            ++d;
          }
        }
        degree_[e.vertex] = d;
        edge_count_ += d;
        break;
      }
      case UndoKind::Add: {
        // Fresh ids are always the largest, so they sit at the back of every
        // neighbor list.
        const VertexId id = e.vertex;
        for (VertexId u : adjacency_[id]) {
          adjacency_[u].pop_back();
          if (alive_[id] && alive_[u]) --degree_[u];
        }
        if (alive_[id]) {
          edge_count_ -= degree_[id];
          --alive_count_;
        }
        weights_.pop_back();
        adjacency_.pop_back();
        alive_.pop_back();
        degree_.pop_back();
        break;
      }
      case UndoKind::SetWeight:
        weights_[e.vertex] = e.old_weight;
        break;
    }
  }
}

bool WeightedGraph::check_invariants() const {
  std::size_t alive = 0;
  std::size_t twice_edges = 0;
  for (VertexId v = 0; v < weights_.size(); ++v) {
    const auto& adj = adjacency_[v];
    if (!std::is_sorted(adj.begin(), adj.end())) return false;
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) return false;
    std::size_t d = 0;
    for (VertexId u : adj) {
      if (u == v || u >= weights_.size()) return false;
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        return false;
      }
      if (alive_[u]) ++d;
    }
    if (!alive_[v]) continue;
    if (weights_[v] <= 0) return false;
    if (d != degree_[v]) return false;
    ++alive;
    twice_edges += d;
  }
  return alive == alive_count_ && twice_edges == 2 * edge_count_;
}

VertexList second_neighborhood(const WeightedGraph& g, VertexId v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::DeadVertex, "vertex " + std::to_string(v) + " is not alive");
  }
  VertexList out;
  for (VertexId u : g.neighbors(v)) {
    for (VertexId x : g.neighbors(u)) {
      if (x != v && !g.adjacent(v, x)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight weight_of(const WeightedGraph& g, std::span<const VertexId> set) {
  Weight total = 0;
  for (VertexId v : set) total += g.weight(v);
  return total;
}

bool is_independent(const WeightedGraph& g, std::span<const VertexId> set) {
  if (set.size() <= 8) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
      }
    }
    return true;
  }
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : set) {
    if (v >= in.size() || in[v]) return false;
    in[v] = 1;
  }
  for (VertexId v : set) {
    for (VertexId u : g.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const WeightedGraph& g, std::span<const VertexId> cover) {
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : cover) {
    if (v < in.size()) in[v] = 1;
  }
  for (VertexId v : g.alive_vertices()) {
    if (in[v]) continue;
    for (VertexId u : g.neighbors(v)) {
      if (!in[u]) return false;
    }
  }
  return true;
}

}  // namespace mwis
