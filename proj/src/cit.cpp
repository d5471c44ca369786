#include "mwis/cit.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace mwis {

namespace {

bool has(const VertexList& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void require_alive(const WeightedGraph& g, VertexId v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::DeadVertex, "vertex " + std::to_string(v) + " is not alive");
  }
}

VertexList sorted_unique(std::span<const VertexId> s) {
  VertexList out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void merge_into(VertexList& set, const VertexList& extra) {
  VertexList out;
  out.reserve(set.size() + extra.size());
  std::set_union(set.begin(), set.end(), extra.begin(), extra.end(), std::back_inserter(out));
  set = std::move(out);
}

// N[S], sorted.
VertexList closed_neighborhood(const WeightedGraph& g, const VertexList& S) {
  VertexList out = S;
  for (VertexId s : S) {
    for (VertexId u : g.neighbors(s)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Weight weight_in(const WeightedGraph& g, VertexId u, const VertexList& S) {
  Weight total = 0;
  for (VertexId z : g.neighbors(u)) {
    if (has(S, z)) total += g.weight(z);
  }
  return total;
}

// N(u) \ N[S]
VertexList outside(const WeightedGraph& g, VertexId u, const VertexList& closed) {
  VertexList out;
  for (VertexId z : g.neighbors(u)) {
    if (!has(closed, z)) out.push_back(z);
  }
  return out;
}

bool independent_sorted(const WeightedGraph& g, const VertexList& set) {
  for (VertexId z : set) {
    for (VertexId y : g.neighbors(z)) {
      if (has(set, y)) return false;
    }
  }
  return true;
}

SatelliteResult satellite_core(const WeightedGraph& g, const VertexList& closed, VertexId u,
                               Weight in_s, bool strict, const CitBudget& budget) {
  const Weight t = g.weight(u) - in_s;
  auto satisfies = [&](Weight w) { return strict ? w > t : w >= t; };
  const VertexList W = outside(g, u, closed);

  SatelliteResult result;
  if (independent_sorted(g, W)) {
    const Weight total = weight_of(g, W);
    if (!satisfies(total)) return result;
    Weight lightest = total;
    for (VertexId z : W) lightest = std::min(lightest, g.weight(z));
    if (satisfies(total - lightest)) {
      result.status = SatelliteStatus::NotUnique;
      return result;
    }
    result.status = SatelliteStatus::Unique;
    result.satellite = W;
    return result;
  }
  if (W.size() > budget.max_satellite_ground) {
    result.status = SatelliteStatus::BudgetExceeded;
    return result;
  }

  const std::size_t k = W.size();
  std::vector<std::uint32_t> adj(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.adjacent(W[i], W[j])) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  int count = 0;
  std::uint32_t found = 0;
  for (std::uint32_t mask = 0; mask < (1u << k) && count < 2; ++mask) {
    Weight w = 0;
    bool independent = true;
    for (std::size_t i = 0; i < k && independent; ++i) {
      if (mask >> i & 1) {
        independent = (adj[i] & mask) == 0;
        w += g.weight(W[i]);
      }
    }
    if (independent && satisfies(w)) {
      ++count;
      found = mask;
    }
  }
  if (count == 0) return result;
  if (count > 1) {
    result.status = SatelliteStatus::NotUnique;
    return result;
  }
  result.status = SatelliteStatus::Unique;
  for (std::size_t i = 0; i < k; ++i) {
    if (found >> i & 1) result.satellite.push_back(W[i]);
  }
  return result;
}

// Extends S by satellites until none extends. Returns false on a conflict
// (only checked when `strict`).
bool grow_confining(const WeightedGraph& g, VertexList& S, bool strict, const CitBudget& budget) {
  while (true) {
    const VertexList closed = closed_neighborhood(g, S);
    VertexList children;
    std::vector<Weight> in_s;
    for (VertexId u : closed) {
      if (has(S, u)) continue;
      const Weight w = weight_in(g, u, S);
      if (strict ? g.weight(u) >= w : g.weight(u) > w) {
        children.push_back(u);
        in_s.push_back(w);
      }
    }
    if (strict) {
      for (std::size_t i = 0; i < children.size(); ++i) {
        const VertexList W = outside(g, children[i], closed);
        const auto a = mwis_weight(g, W, budget.subsolve);
        if (a && g.weight(children[i]) >= in_s[i] + *a) return false;
      }
    }
    if (S.size() >= budget.max_set_growth) return true;
    bool extended = false;
    for (std::size_t i = 0; i < children.size() && !extended; ++i) {
      auto sat = satellite_core(g, closed, children[i], in_s[i], strict, budget);
      if (sat.status == SatelliteStatus::Unique) {
        merge_into(S, sat.satellite);
        extended = true;
      }
    }
    if (!extended) return true;
  }
}

// α(N(p)\C) or nullopt on cap.
std::optional<Weight> open_alpha(const WeightedGraph& g, VertexId p, const VertexList& C,
                                 const CitBudget& budget) {
  VertexList rest;
  for (VertexId z : g.neighbors(p)) {
    if (!has(C, z)) rest.push_back(z);
  }
  return mwis_weight(g, rest, budget.subsolve);
}

VertexList mirrors_core(const WeightedGraph& g, const VertexList& C, VertexId p, bool strict,
                        const CitBudget& budget) {
  VertexList out;
  for (VertexId u : second_neighborhood(g, p)) {
    if (has(C, u)) continue;
    VertexList rest;
    for (VertexId z : g.neighbors(p)) {
      if (!has(C, z) && !g.adjacent(z, u)) rest.push_back(z);
    }
    const auto a = mwis_weight(g, rest, budget.subsolve);
    if (!a) continue;
    if (strict ? g.weight(p) >= *a : g.weight(p) > *a) out.push_back(u);
  }
  return out;
}

bool grow_covering(const WeightedGraph& g, VertexList& C, bool strict, const CitBudget& budget) {
  while (true) {
    std::vector<std::optional<Weight>> alphas;
    alphas.reserve(C.size());
    for (VertexId p : C) alphas.push_back(open_alpha(g, p, C, budget));
    if (strict) {
      for (std::size_t i = 0; i < C.size(); ++i) {
        if (alphas[i] && g.weight(C[i]) >= *alphas[i]) return false;
      }
    }
    if (C.size() >= budget.max_set_growth) return true;
    bool extended = false;
    for (std::size_t i = 0; i < C.size() && !extended; ++i) {
      if (!alphas[i]) continue;
      const bool father = strict ? g.weight(C[i]) < *alphas[i] : g.weight(C[i]) <= *alphas[i];
      if (!father) continue;
      VertexList m = mirrors_core(g, C, C[i], strict, budget);
      if (!m.empty()) {
        merge_into(C, m);
        extended = true;
      }
    }
    if (!extended) return true;
  }
}

}  // namespace

SatelliteResult satellite_of(const WeightedGraph& g, std::span<const VertexId> S, VertexId u,
                             bool strict, const CitBudget& budget) {
  const VertexList set = sorted_unique(S);
  for (VertexId s : set) require_alive(g, s);
  require_alive(g, u);
  if (has(set, u)) throw Error(ErrorCode::InvalidArgument, "u must lie outside S");
  const Weight in_s = weight_in(g, u, set);
  if (in_s == 0) throw Error(ErrorCode::InvalidArgument, "u is not adjacent to S");
  if (strict ? g.weight(u) < in_s : g.weight(u) <= in_s) {
    throw Error(ErrorCode::InvalidArgument,
                strict ? "u is not a child of S" : "u is not an inferred child of S");
  }
  return satellite_core(g, closed_neighborhood(g, set), u, in_s, strict, budget);
}

ConfiningOutcome compute_confining(const WeightedGraph& g, VertexId v, const CitBudget& budget) {
  require_alive(g, v);
  ConfiningOutcome out;
  out.set = {v};
  out.confined = grow_confining(g, out.set, true, budget);
  if (!out.confined) out.set.clear();
  return out;
}

VertexList mirrors_of(const WeightedGraph& g, std::span<const VertexId> C, VertexId v, bool strict,
                      const CitBudget& budget) {
  const VertexList set = sorted_unique(C);
  for (VertexId c : set) require_alive(g, c);
  if (!has(set, v)) throw Error(ErrorCode::InvalidArgument, "father must belong to C");
  return mirrors_core(g, set, v, strict, budget);
}

CoveringOutcome compute_covering(const WeightedGraph& g, VertexId v, const CitBudget& budget) {
  require_alive(g, v);
  CoveringOutcome out;
  out.set = {v};
  out.covered = grow_covering(g, out.set, true, budget);
  if (!out.covered) out.set.clear();
  return out;
}

VertexList inferred_confining(const WeightedGraph& g, VertexId v, const CitBudget& budget) {
  require_alive(g, v);
  VertexList set = {v};
  grow_confining(g, set, false, budget);
  return set;
}

VertexList inferred_covering(const WeightedGraph& g, VertexId v, const CitBudget& budget) {
  require_alive(g, v);
  VertexList set = {v};
  grow_covering(g, set, false, budget);
  return set;
}

bool confining_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                            const CitBudget& budget) {
  require_alive(g, v);
  return confining_simultaneous(g, u, v, compute_confining(g, v, budget), budget);
}

bool confining_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                            const ConfiningOutcome& of_v, const CitBudget& budget) {
  require_alive(g, u);
  require_alive(g, v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "u and v must differ");
  if (!of_v.confined || !has(of_v.set, u)) return false;
  const auto of_u = compute_confining(g, u, budget);
  return of_u.confined && has(of_u.set, v);
}

bool covering_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                           const CitBudget& budget) {
  require_alive(g, u);
  require_alive(g, v);
  if (g.adjacent(u, v)) {
    throw Error(ErrorCode::AdjacentPair,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
  }
  return covering_simultaneous(g, u, v, compute_covering(g, v, budget), budget);
}

bool covering_simultaneous(const WeightedGraph& g, VertexId u, VertexId v,
                           const CoveringOutcome& of_v, const CitBudget& budget) {
  require_alive(g, u);
  require_alive(g, v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "u and v must differ");
  if (g.adjacent(u, v)) {
    throw Error(ErrorCode::AdjacentPair,
                "vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
  }
  if (!of_v.covered || !has(of_v.set, u)) return false;
  const auto of_u = compute_covering(g, u, budget);
  return of_u.covered && has(of_u.set, v);
}

}  // namespace mwis
