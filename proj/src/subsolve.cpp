#include "mwis/subsolve.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace mwis {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned i) { return Mask{1} << i; }

// Induced subgraph on at most 64 vertices, indexed in ascending id order.
class LocalGraph {
 public:
  LocalGraph(const WeightedGraph& g, std::span<const VertexId> vertices) {
    ids_.assign(vertices.begin(), vertices.end());
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (VertexId v : ids_) {
      if (!g.contains(v)) {
        throw Error(ErrorCode::DeadVertex, "vertex " + std::to_string(v) + " is not alive");
      }
    }
    if (ids_.size() > 64) return;
    weights_.resize(ids_.size());
    adj_.assign(ids_.size(), 0);
    for (unsigned i = 0; i < ids_.size(); ++i) {
      weights_[i] = g.weight(ids_[i]);
      // Walk the shorter of the two sorted lists.
      auto nbrs = g.raw_neighbors(ids_[i]);
      if (nbrs.size() < ids_.size()) {
        for (VertexId u : nbrs) {
          auto it = std::lower_bound(ids_.begin(), ids_.end(), u);
          if (it != ids_.end() && *it == u && g.alive(u)) adj_[i] |= bit(it - ids_.begin());
        }
      } else {
        for (unsigned j = 0; j < ids_.size(); ++j) {
          if (j != i && std::binary_search(nbrs.begin(), nbrs.end(), ids_[j])) adj_[i] |= bit(j);
        }
      }
    }
  }

  std::size_t size() const { return ids_.size(); }
  Mask all() const { return ids_.size() == 64 ? ~Mask{0} : bit(ids_.size()) - 1; }
  Mask adj(unsigned i) const { return adj_[i]; }
  Weight weight(unsigned i) const { return weights_[i]; }
  VertexId id(unsigned i) const { return ids_[i]; }

  Weight sum(Mask m) const {
    Weight total = 0;
    for (; m; m &= m - 1) total += weights_[std::countr_zero(m)];
    return total;
  }

  Weight alpha(Mask cand) const {
    best_ = 0;
    branch(cand, 0);
    return best_;
  }

  VertexList to_ids(Mask m) const {
    VertexList out;
    for (; m; m &= m - 1) out.push_back(ids_[std::countr_zero(m)]);
    return out;
  }

 private:
  void branch(Mask cand, Weight current) const {
    const Weight rest = sum(cand);
    if (current + rest <= best_) return;
    unsigned pick = 0;
    int pick_degree = -1;
    for (Mask m = cand; m; m &= m - 1) {
      const unsigned i = std::countr_zero(m);
      const int d = std::popcount(adj_[i] & cand);
      if (d > pick_degree) {
        pick_degree = d;
        pick = i;
      }
    }
    if (pick_degree <= 0) {
      best_ = current + rest;
      return;
    }
    branch(cand & ~adj_[pick] & ~bit(pick), current + weights_[pick]);
    branch(cand & ~bit(pick), current);
  }

  VertexList ids_;
  std::vector<Weight> weights_;
  std::vector<Mask> adj_;
  mutable Weight best_ = 0;
};

bool fits(const LocalGraph& local, const SubsolveBudget& budget) {
  return local.size() <= std::min<std::size_t>(budget.max_vertices, 64);
}

struct Enumerator {
  const LocalGraph& local;
  Weight target;
  std::size_t cap;
  std::vector<VertexList> found;
  bool overflow = false;

  void run(Mask cand, Weight current, Mask chosen) {
    if (overflow) return;
    if (cand == 0) {
      if (found.size() == cap) {
        overflow = true;
        return;
      }
      found.push_back(local.to_ids(chosen));
      return;
    }
    const unsigned i = std::countr_zero(cand);
    const Mask with = cand & ~local.adj(i) & ~bit(i);
    if (current + local.weight(i) + local.alpha(with) == target) {
      run(with, current + local.weight(i), chosen | bit(i));
    }
    const Mask without = cand & ~bit(i);
    if (current + local.alpha(without) == target) run(without, current, chosen);
  }
};

}  // namespace

std::optional<SubsolveResult> mwis_exact(const WeightedGraph& g,
                                         std::span<const VertexId> vertices,
                                         const SubsolveBudget& budget) {
  const LocalGraph local(g, vertices);
  if (!fits(local, budget)) return std::nullopt;
  SubsolveResult result;
  Mask cand = local.all();
  result.weight = local.alpha(cand);
  Weight taken = 0;
  while (cand) {
    const unsigned i = std::countr_zero(cand);
    const Mask with = cand & ~local.adj(i) & ~bit(i);
    if (taken + local.weight(i) + local.alpha(with) == result.weight) {
      taken += local.weight(i);
      result.witness.push_back(local.id(i));
      cand = with;
    } else {
      cand &= ~bit(i);
    }
  }
  return result;
}

std::optional<Weight> mwis_weight(const WeightedGraph& g,
                                  std::span<const VertexId> vertices,
                                  const SubsolveBudget& budget) {
  const LocalGraph local(g, vertices);
  if (!fits(local, budget)) return std::nullopt;
  return local.alpha(local.all());
}

std::optional<std::vector<VertexList>> enumerate_all_mwis(const WeightedGraph& g,
                                                          std::span<const VertexId> vertices,
                                                          const SubsolveBudget& budget) {
  const LocalGraph local(g, vertices);
  if (!fits(local, budget)) return std::nullopt;
  Enumerator e{local, local.alpha(local.all()), budget.max_subsets, {}};
  e.run(local.all(), 0, 0);
  if (e.overflow) return std::nullopt;
  return std::move(e.found);
}

std::optional<SubsolveResult> mwis_exact(const WeightedGraph& g, const SubsolveBudget& budget) {
  const VertexList all = g.alive_vertices();
  return mwis_exact(g, all, budget);
}

std::optional<std::vector<VertexList>> enumerate_all_mwis(const WeightedGraph& g,
                                                          const SubsolveBudget& budget) {
  const VertexList all = g.alive_vertices();
  return enumerate_all_mwis(g, all, budget);
}

}  // namespace mwis
