#include "mwis/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <string>

namespace mwis {

namespace {

constexpr std::uint32_t kAbsent = static_cast<std::uint32_t>(-1);

void require_member(const SearchState& s, VertexId v) {
  if (!s.graph().contains(v) || !s.in_cover(v)) {
    throw Error(ErrorCode::NotInCover, "vertex " + std::to_string(v) + " is not in the cover");
  }
}

// Smaller loss first, then larger weight, then smaller id.
bool loss_before(const SearchState& s, VertexId a, VertexId b) {
  const Loss la = s.loss(a);
  const Loss lb = s.loss(b);
  if (la < lb) return true;
  if (lb < la) return false;
  const Weight wa = s.graph().weight(a);
  const Weight wb = s.graph().weight(b);
  if (wa != wb) return wa > wb;
  return a < b;
}

VertexId min_loss(const SearchState& s, std::span<const VertexId> members) {
  VertexId best = kNoVertex;
  for (VertexId v : members) {
    if (best == kNoVertex || loss_before(s, v, best)) best = v;
  }
  return best;
}

VertexId min_valid_score(const SearchState& s, std::span<const VertexId> members) {
  VertexId best = kNoVertex;
  Weight best_score = 0;
  for (VertexId v : members) {
    const Weight score = s.valid_score(v);
    if (best == kNoVertex || score < best_score ||
        (score == best_score && (s.graph().weight(v) > s.graph().weight(best) ||
                                 (s.graph().weight(v) == s.graph().weight(best) && v < best)))) {
      best = v;
      best_score = score;
    }
  }
  return best;
}

void drop_redundant(SearchState& s, VertexList candidates) {
  const auto& g = s.graph();
  std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
    if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
    return a < b;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (VertexId v : candidates) {
    if (s.in_cover(v) && s.free_neighbors(v) == 0) s.remove(v);
  }
}

}  // namespace

SearchState::SearchState(const WeightedGraph& g, std::span<const VertexId> cover,
                         std::uint64_t seed)
    : g_(g),
      in_cover_(g.id_bound(), 0),
      free_count_(g.id_bound(), 0),
      free_weight_(g.id_bound(), 0),
      incident_(g.id_bound()),
      rng_(seed) {
  for (VertexId v : g.alive_vertices()) {
    for (VertexId u : g.neighbors(v)) {
      if (v < u) {
        const auto id = static_cast<std::uint32_t>(edges_.size());
        edges_.emplace_back(v, u);
        incident_[v].push_back(id);
        incident_[u].push_back(id);
      }
    }
  }
  position_.assign(edges_.size(), kAbsent);
  for (VertexId v : cover) {
    if (!g.contains(v)) throw Error(ErrorCode::DeadVertex, "cover vertex is not in the graph");
    if (in_cover_[v]) continue;
    in_cover_[v] = 1;
    ++cover_size_;
    cover_weight_ += g.weight(v);
  }
  for (VertexId v : g.alive_vertices()) {
    for (VertexId u : g.neighbors(v)) {
      if (!in_cover_[u]) {
        ++free_count_[v];
        free_weight_[v] += g.weight(u);
      }
    }
  }
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    if (!in_cover_[edges_[e].first] && !in_cover_[edges_[e].second]) {
      position_[e] = static_cast<std::uint32_t>(uncovered_.size());
      uncovered_.push_back(e);
    }
  }
}

VertexList SearchState::cover() const {
  VertexList out;
  for (VertexId v : g_.alive_vertices()) {
    if (in_cover_[v]) out.push_back(v);
  }
  return out;
}

void SearchState::add(VertexId v) {
  if (in_cover_[v]) return;
  in_cover_[v] = 1;
  ++cover_size_;
  cover_weight_ += g_.weight(v);
  for (VertexId u : g_.neighbors(v)) {
    --free_count_[u];
    free_weight_[u] -= g_.weight(v);
  }
  for (std::uint32_t e : incident_[v]) {
    const std::uint32_t at = position_[e];
    if (at == kAbsent) continue;
    const std::uint32_t last = uncovered_.back();
    uncovered_[at] = last;
    position_[last] = at;
    uncovered_.pop_back();
    position_[e] = kAbsent;
  }
}

void SearchState::remove(VertexId v) {
  if (!in_cover_[v]) return;
  in_cover_[v] = 0;
  --cover_size_;
  cover_weight_ -= g_.weight(v);
  for (VertexId u : g_.neighbors(v)) {
    ++free_count_[u];
    free_weight_[u] += g_.weight(v);
  }
  for (std::uint32_t e : incident_[v]) {
    const VertexId other = edges_[e].first == v ? edges_[e].second : edges_[e].first;
    if (in_cover_[other]) continue;
    position_[e] = static_cast<std::uint32_t>(uncovered_.size());
    uncovered_.push_back(e);
  }
}

Loss SearchState::loss(VertexId v) const {
  require_member(*this, v);
  return {free_count_[v], g_.weight(v)};
}

Weight SearchState::valid_score(VertexId v) const {
  require_member(*this, v);
  return free_weight_[v] - g_.weight(v);
}

VertexList SearchState::uncovered_endpoints() const {
  VertexList out;
  for (std::uint32_t e : uncovered_) {
    out.push_back(edges_[e].first);
    out.push_back(edges_[e].second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexList construct_cover(const WeightedGraph& g, std::mt19937_64& rng) {
  struct Entry {
    std::size_t gain;
    Weight weight;
    std::uint64_t tie;
    VertexId id;
  };
  auto below = [](const Entry& a, const Entry& b) {
    const __int128 lhs = static_cast<__int128>(a.gain) * b.weight;
    const __int128 rhs = static_cast<__int128>(b.gain) * a.weight;
    if (lhs != rhs) return lhs < rhs;
    return a.tie < b.tie;
  };
  std::vector<std::uint64_t> tie(g.id_bound(), 0);
  std::vector<std::size_t> gain(g.id_bound(), 0);
  std::vector<char> chosen(g.id_bound(), 0);
  std::priority_queue<Entry, std::vector<Entry>, decltype(below)> heap(below);
  for (VertexId v : g.alive_vertices()) {
    tie[v] = rng();
    gain[v] = g.degree(v);
    if (gain[v] > 0) heap.push({gain[v], g.weight(v), tie[v], v});
  }
  VertexList cover;
  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (chosen[top.id] || top.gain != gain[top.id]) continue;
    chosen[top.id] = 1;
    cover.push_back(top.id);
    for (VertexId u : g.neighbors(top.id)) {
      if (chosen[u]) continue;
      if (--gain[u] > 0) heap.push({gain[u], g.weight(u), tie[u], u});
    }
  }
  SearchState state(g, cover);
  drop_redundant(state, cover);
  return state.cover();
}

VertexList remove_vertices(SearchState& state, const SearchOptions& options,
                           std::vector<std::optional<VertexList>>* inferred_cache,
                           const std::vector<char>* tabu) {
  if (state.cover_size() == 0) throw Error(ErrorCode::EmptyCover, "cover is empty");
  const auto& g = state.graph();
  VertexList removed;
  auto take = [&](VertexId v) {
    state.remove(v);
    removed.push_back(v);
  };
  auto eligible = [&] {
    VertexList all = state.cover();
    if (!tabu) return all;
    VertexList free;
    for (VertexId v : all) {
      if (!(*tabu)[v]) free.push_back(v);
    }
    return free.empty() ? all : free;
  };

  VertexList members = eligible();
  take(min_loss(state, members));

  members = eligible();
  if (!members.empty()) {
    const VertexId v = options.dynamic_second ? min_valid_score(state, members) : kNoVertex;
    if (v != kNoVertex && state.valid_score(v) < 0) {
      take(v);
      if (options.cit) {
        VertexList local;
        const VertexList* inferred = &local;
        if (inferred_cache) {
          auto& slot = (*inferred_cache)[v];
          if (!slot) slot = inferred_confining(g, v, options.budget);
          inferred = &*slot;
        } else {
          local = inferred_confining(g, v, options.budget);
        }
        bool bulk = false;
        for (VertexId u : *inferred) {
          if (u != v && state.in_cover(u)) {
            take(u);
            bulk = true;
          }
        }
        if (bulk) ++state.bulk_removals;
      }
    } else {
      take(min_loss(state, members));
    }
  }

  std::size_t removed_degree = 0;
  for (VertexId v : removed) removed_degree += g.degree(v);
  const double average = g.alive_count() ? 2.0 * static_cast<double>(g.edge_count()) /
                                               static_cast<double>(g.alive_count())
                                         : 0.0;
  members = eligible();
  if (static_cast<double>(removed_degree) < 2.0 * average && !members.empty() &&
      options.bms_samples > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    VertexId best = kNoVertex;
    for (std::size_t i = 0; i < options.bms_samples; ++i) {
      const VertexId v = members[pick(state.rng())];
      if (best == kNoVertex || loss_before(state, v, best)) best = v;
    }
    take(best);
  }
  return removed;
}

SearchResult causal_search(const WeightedGraph& g, const SearchOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto seconds = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  SearchResult result;
  result.seed = options.seed;
  std::mt19937_64 construct_rng(options.seed);
  SearchState state(g, construct_cover(g, construct_rng), options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::optional<VertexList>> cache(g.id_bound());
  std::vector<char> near(g.id_bound(), 0);
  std::vector<char> tabu(g.id_bound(), 0);
  VertexList last_added;

  VertexList best = state.cover();
  Weight best_weight = state.cover_weight();
  auto reached = [&] {
    return options.target_cover_weight && best_weight <= *options.target_cover_weight;
  };

  while (state.cover_size() > 0 && !reached()) {
    if (options.max_iterations) {
      if (result.iterations >= *options.max_iterations) break;
    } else if (seconds() >= options.cutoff_secs) {
      break;
    }
    ++result.iterations;

    const VertexList removed =
        remove_vertices(state, options, &cache, options.tabu ? &tabu : nullptr);
    for (VertexId v : last_added) tabu[v] = 0;
    for (VertexId r : removed) {
      for (VertexId u : g.neighbors(r)) near[u] = 1;
    }
    VertexList added;
    while (state.uncovered_count() > 0) {
      VertexId pick = kNoVertex;
      std::size_t ties = 0;
      for (VertexId v : state.uncovered_endpoints()) {
        if (!near[v]) continue;
        if (pick == kNoVertex) {
          pick = v;
          ties = 1;
          continue;
        }
        const Loss a{state.free_neighbors(v), g.weight(v)};
        const Loss b{state.free_neighbors(pick), g.weight(pick)};
        if (b < a) {
          pick = v;
          ties = 1;
        } else if (a == b && std::uniform_int_distribution<std::size_t>(0, ties++)(state.rng()) == 0) {
          pick = v;
        }
      }
      state.add(pick);
      added.push_back(pick);
    }
    for (VertexId r : removed) {
      for (VertexId u : g.neighbors(r)) near[u] = 0;
    }
    for (VertexId v : added) tabu[v] = 1;
    last_added = added;
    VertexList candidates = added;
    for (VertexId v : added) {
      for (VertexId u : g.neighbors(v)) candidates.push_back(u);
    }
    drop_redundant(state, std::move(candidates));

    if (state.cover_weight() < best_weight) {
      best_weight = state.cover_weight();
      best = state.cover();
      result.time_to_best = seconds();
    }
    if (options.observer) options.observer(state);
  }

  result.cover = std::move(best);
  result.cover_weight = best_weight;
  std::vector<char> mark(g.id_bound(), 0);
  for (VertexId v : result.cover) mark[v] = 1;
  for (VertexId v : g.alive_vertices()) {
    if (!mark[v]) result.independent_set.push_back(v);
  }
  result.is_weight = weight_of(g, result.independent_set);
  result.cit_bulk_removals = state.bulk_removals;
  result.elapsed = seconds();
  return result;
}

}  // namespace mwis
