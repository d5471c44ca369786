#include "mwis/constraints.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace mwis {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Constraint keeping S's neighbor p from replacing N(p)∩S profitably.
// Empty N(p)\N[S] gives no usable constraint.
std::optional<PackingConstraint> swap_guard(const WeightedGraph& g, VertexId p,
                                            Weight inside_weight,
                                            const std::vector<char>& closed) {
  PackingConstraint c;
  Weight total = 0;
  for (VertexId z : g.neighbors(p)) {
    if (closed[z]) continue;
    c.terms.emplace_back(z, g.weight(z));
    total += g.weight(z);
  }
  if (c.terms.empty()) return std::nullopt;
  c.rhs = total - (g.weight(p) - inside_weight);
  return c;
}

}  // namespace

std::vector<PackingConstraint> make_include_constraints(const WeightedGraph& g, VertexId v) {
  std::vector<char> closed(g.id_bound(), 0);
  closed[v] = 1;
  for (VertexId u : g.neighbors(v)) closed[u] = 1;
  std::vector<PackingConstraint> out;
  for (VertexId u : g.neighbors(v)) {
    if (g.weight(u) < g.weight(v)) continue;
    if (auto c = swap_guard(g, u, g.weight(v), closed)) out.push_back(std::move(*c));
  }
  return out;
}

PackingConstraint make_exclude_constraint(const WeightedGraph& g, VertexId v, bool strict) {
  if (g.degree(v) == 0) {
    throw Error(ErrorCode::DegenerateConstraint,
                "vertex " + std::to_string(v) + " has no neighbors");
  }
  PackingConstraint c;
  Weight total = 0;
  for (VertexId z : g.neighbors(v)) {
    c.terms.emplace_back(z, g.weight(z));
    total += g.weight(z);
  }
  c.rhs = total - g.weight(v);
  c.strict = strict;
  return c;
}

void ConstraintStore::add(PackingConstraint c) {
  const auto id = static_cast<std::uint32_t>(list_.size());
  for (const auto& [z, coef] : c.terms) index_[z].push_back(id);
  list_.push_back(std::move(c));
  alive_.push_back(1);
}

template <class F>
void ConstraintStore::for_each_with(VertexId z, F&& f) {
  auto it = index_.find(z);
  if (it == index_.end()) return;
  const auto ids = std::move(it->second);
  index_.erase(it);
  for (std::uint32_t id : ids) {
    if (alive_[id]) f(list_[id], id);
  }
}

void ConstraintStore::update_on_include(VertexId z) {
  for_each_with(z, [z](PackingConstraint& c, std::uint32_t) {
    std::erase_if(c.terms, [z](const auto& t) { return t.first == z; });
  });
}

void ConstraintStore::update_on_exclude(VertexId z) {
  for_each_with(z, [z](PackingConstraint& c, std::uint32_t) {
    for (auto it = c.terms.begin(); it != c.terms.end(); ++it) {
      if (it->first == z) {
        c.rhs -= it->second;
        c.terms.erase(it);
        break;
      }
    }
  });
}

void ConstraintStore::drop_containing(VertexId z) {
  for_each_with(z, [this](PackingConstraint&, std::uint32_t id) { alive_[id] = 0; });
}

void ConstraintStore::apply(const ReductionEvent& event) {
  if (index_.empty()) return;
  std::visit(overloaded{
                 [this](const IncludeVertex& e) {
                   update_on_include(e.vertex);
                   for (VertexId r : e.removed) update_on_exclude(r);
                 },
                 [this](const ExcludeVertex& e) { update_on_exclude(e.vertex); },
                 [this](const ContractSet& e) {
                   for (VertexId m : e.members) drop_containing(m);
                 },
                 [this](const FoldPendant& e) {
                   drop_containing(e.pendant);
                   drop_containing(e.neighbor);
                 },
             },
             event);
}

std::size_t ConstraintStore::size() const noexcept {
  return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1));
}

std::vector<PackingConstraint> ConstraintStore::alive_constraints() const {
  std::vector<PackingConstraint> out;
  for (std::size_t i = 0; i < list_.size(); ++i) {
    if (alive_[i]) out.push_back(list_[i]);
  }
  return out;
}

ConstraintStatus check_constraints(WeightedGraph& g, ConstraintStore& store,
                                   ReductionTrace& trace) {
  auto record = [&] { store.apply(trace.events().back()); };
  bool changed = false;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < store.capacity() && !again; ++i) {
      if (!store.alive(i)) continue;
      const PackingConstraint c = store.at(i);
      // (a)
      if (c.limit() <= 0) return ConstraintStatus::Pruned;
      if (c.terms.empty()) {
        store.kill(i);
        continue;
      }
      // (b)
      Weight lightest = c.terms.front().second;
      for (const auto& t : c.terms) lightest = std::min(lightest, t.second);
      VertexList members;
      for (const auto& t : c.terms) members.push_back(t.first);
      std::sort(members.begin(), members.end());
      if (c.limit() <= lightest) {
        if (!is_independent(g, members)) return ConstraintStatus::Pruned;
        std::vector<char> closed(g.id_bound(), 0);
        for (VertexId s : members) {
          closed[s] = 1;
          for (VertexId u : g.neighbors(s)) closed[u] = 1;
        }
        std::vector<PackingConstraint> guards;
        VertexList around;
        for (VertexId s : members) {
          for (VertexId p : g.neighbors(s)) around.push_back(p);
        }
        std::sort(around.begin(), around.end());
        around.erase(std::unique(around.begin(), around.end()), around.end());
        for (VertexId p : around) {
          Weight inside = 0;
          for (VertexId z : g.neighbors(p)) {
            if (std::binary_search(members.begin(), members.end(), z)) inside += g.weight(z);
          }
          if (g.weight(p) < inside) continue;
          if (auto guard = swap_guard(g, p, inside, closed)) guards.push_back(std::move(*guard));
        }
        store.kill(i);
        for (VertexId s : members) {
          include_vertex(g, trace, s);
          record();
        }
        for (auto& guard : guards) store.add(std::move(guard));
        changed = again = true;
        continue;
      }
      // (c)
      VertexList around;
      for (VertexId s : members) {
        for (VertexId u : g.neighbors(s)) {
          if (!std::binary_search(members.begin(), members.end(), u)) around.push_back(u);
        }
      }
      std::sort(around.begin(), around.end());
      around.erase(std::unique(around.begin(), around.end()), around.end());
      for (VertexId u : around) {
        Weight forced = 0;
        for (const auto& [z, coef] : c.terms) {
          if (g.adjacent(u, z)) forced += coef;
        }
        if (forced < c.limit()) continue;
        PackingConstraint guard = make_exclude_constraint(g, u, false);
        exclude_vertex(g, trace, u);
        record();
        store.add(std::move(guard));
        changed = again = true;
        break;
      }
    }
  }
  return changed ? ConstraintStatus::Simplified : ConstraintStatus::Clean;
}

}  // namespace mwis
