#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "mwis/cit.hpp"

namespace mwis {

// Edges covered only by v, per unit of weight.
struct Loss {
  std::size_t edges = 0;
  Weight weight = 1;

  double value() const { return static_cast<double>(edges) / static_cast<double>(weight); }
  friend bool operator<(const Loss& a, const Loss& b) {
    return static_cast<__int128>(a.edges) * b.weight < static_cast<__int128>(b.edges) * a.weight;
  }
  friend bool operator==(const Loss& a, const Loss& b) { return !(a < b) && !(b < a); }
};

// Cover bookkeeping over a fixed graph. Per vertex it keeps how many
// neighbors are outside the cover and their total weight.
class SearchState {
 public:
  SearchState(const WeightedGraph& g, std::span<const VertexId> cover, std::uint64_t seed = 0);

  const WeightedGraph& graph() const noexcept { return g_; }
  bool in_cover(VertexId v) const noexcept { return in_cover_[v] != 0; }
  std::size_t cover_size() const noexcept { return cover_size_; }
  Weight cover_weight() const noexcept { return cover_weight_; }
  std::size_t uncovered_count() const noexcept { return uncovered_.size(); }
  VertexList cover() const;

  void add(VertexId v);
  void remove(VertexId v);

  // Both throw NotInCover for v outside the cover.
  Loss loss(VertexId v) const;
  Weight valid_score(VertexId v) const;

  std::size_t free_neighbors(VertexId v) const noexcept { return free_count_[v]; }

  std::mt19937_64& rng() noexcept { return rng_; }

  // Endpoints of uncovered edges that are outside the cover, ascending.
  VertexList uncovered_endpoints() const;

  std::size_t bulk_removals = 0;

 private:
  const WeightedGraph& g_;
  std::vector<char> in_cover_;
  std::vector<std::size_t> free_count_;
  std::vector<Weight> free_weight_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> uncovered_;
  std::vector<std::uint32_t> position_;
  std::size_t cover_size_ = 0;
  Weight cover_weight_ = 0;
  std::mt19937_64 rng_;
};

// Greedy by newly covered edges per weight, then redundant vertices dropped
// heaviest first. Ties in the greedy phase are broken by `rng`.
VertexList construct_cover(const WeightedGraph& g, std::mt19937_64& rng);

struct SearchOptions {
  double cutoff_secs = 5;
  std::optional<std::uint64_t> max_iterations;  // replaces the clock when set
  std::uint64_t seed = 0;
  bool cit = true;
  bool dynamic_second = true;  // second removal by valid_score when it is negative
  std::size_t bms_samples = 50;
  bool tabu = true;  // vertices added in one step may not be removed in the next
  CitBudget budget;
  std::optional<Weight> target_cover_weight;  // stop once reached
  std::function<void(const SearchState&)> observer;  // called after every iteration
};

// Removal phase: the min-loss vertex, then a second one chosen dynamically
// (with its inferred confining set when `cit`), then a BMS sample when the
// removed degree is small. Throws EmptyCover.
// Vertices flagged in `tabu` are skipped unless nothing else is left.
VertexList remove_vertices(SearchState& state, const SearchOptions& options,
                           std::vector<std::optional<VertexList>>* inferred_cache = nullptr,
                           const std::vector<char>* tabu = nullptr);

struct SearchResult {
  VertexList cover;
  Weight cover_weight = 0;
  VertexList independent_set;
  Weight is_weight = 0;
  std::uint64_t iterations = 0;
  std::uint64_t cit_bulk_removals = 0;
  double elapsed = 0;
  double time_to_best = 0;
  std::uint64_t seed = 0;
};

SearchResult causal_search(const WeightedGraph& g, const SearchOptions& options = {});

}  // namespace mwis
