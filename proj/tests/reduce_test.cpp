#include <doctest.h>

#include <random>

#include "mwis/reduce.hpp"
#include "support/oracle.hpp"

using namespace mwis;

TEST_CASE("basic rules: isolated vertex and heavy star center") {
  WeightedGraph iso({5});
  ReductionTrace t;
  CHECK(apply_basic_rules(iso, t));
  CHECK(iso.empty());
  CHECK(t.offset() == 5);

  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  auto s = WeightedGraph::from_edges({10, 1, 2, 3}, star);
  ReductionTrace ts;
  CHECK(apply_basic_rules(s, ts));
  CHECK(ts.offset() == 10);
  CHECK(s.empty());
  CHECK(std::holds_alternative<IncludeVertex>(ts.events().front()));
  CHECK(std::get<IncludeVertex>(ts.events().front()).vertex == 0);
}

TEST_CASE("basic rules: pendant fold") {
  // Pendant 0 (2) on 1 (5); 1 sits in a triangle with 2 and 3 so nothing else fires first.
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
  for (Weight w : {1, 4, 6}) {
    auto g = WeightedGraph::from_edges({2, 5, w, w}, edges);
    const Weight expected = oracle::alpha(g);
    const auto original = g;
    ReductionTrace t;
    apply_basic_rules(g, t);
    CHECK(t.offset() + oracle::alpha(g) == expected);
    const auto kernel_best = oracle::all_mwis(g).front();
    const auto full = reconstruct_solution(g, t, kernel_best);
    CHECK(is_independent(original, full));
    CHECK(weight_of(original, full) == expected);
  }
  auto p2 = oracle::path({2, 5});
  ReductionTrace t;
  apply_basic_rules(p2, t);
  CHECK(t.offset() == 5);
}

TEST_CASE("basic rules: domination excludes the dominated neighbor") {
  // Triangle 0,1,2 plus 1-3. N[0] = {0,1,2} ⊆ N[1] = {0,1,2,3}; w(1) <= w(0).
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  auto g = WeightedGraph::from_edges({5, 4, 4, 4}, edges);
  ReductionTrace t;
  RuleStats stats;
  apply_basic_rules(g, t, &stats);
  CHECK(std::holds_alternative<ExcludeVertex>(t.events().front()));
  CHECK(t.offset() + oracle::alpha(g) == 9);
}

TEST_CASE("confining step examples") {
  auto p3 = oracle::path({1, 3, 1});
  ReductionTrace t;
  CHECK(remove_unconfined_contract_confining(p3, t));
  CHECK(p3.alive_vertices() == VertexList{1});
  CHECK(t.size() == 2);
  apply_basic_rules(p3, t);
  CHECK(p3.empty());
  CHECK(t.offset() == 3);

  auto p4 = oracle::path({2, 3, 2, 1});
  ReductionTrace t4;
  CHECK(remove_unconfined_contract_confining(p4, t4));
  REQUIRE(std::holds_alternative<ContractSet>(t4.events().front()));
  CHECK(std::get<ContractSet>(t4.events().front()).members == VertexList{0, 2});

  WeightedGraph empty;
  ReductionTrace te;
  CHECK_FALSE(remove_unconfined_contract_confining(empty, te));
}

TEST_CASE("covering step examples") {
  auto p3 = oracle::path({1, 2, 2});
  ReductionTrace t;
  CHECK(remove_uncovered_contract_covering(p3, t));
  REQUIRE(std::holds_alternative<IncludeVertex>(t.events().front()));
  CHECK(std::get<IncludeVertex>(t.events().front()).vertex == 0);
  apply_basic_rules(p3, t);
  CHECK(p3.empty());
  CHECK(t.offset() == 3);

  auto q = oracle::path({1, 3, 2});
  ReductionTrace tq;
  CHECK(remove_uncovered_contract_covering(q, tq));
  REQUIRE(std::holds_alternative<ContractSet>(tq.events().front()));
  const auto& ev = std::get<ContractSet>(tq.events().front());
  CHECK(ev.members == VertexList{0, 2});
  CHECK(tq.offset() + oracle::alpha(q) == 3);
}

TEST_CASE("covering step is inapplicable without fathers") {
  WeightedGraph g;
  ReductionTrace t;
  CHECK_FALSE(remove_uncovered_contract_covering(g, t));

  // K_{17,17}: every open neighborhood exceeds the subsolve cap, so no vertex
  // can be shown to be a father or to conflict.
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 17; ++u) {
    for (VertexId v = 17; v < 34; ++v) edges.emplace_back(u, v);
  }
  auto k = WeightedGraph::from_edges(std::vector<Weight>(34, 1), edges);
  ReductionTrace tk;
  CHECK_FALSE(remove_uncovered_contract_covering(k, tk));
  CHECK(k.alive_count() == 34);
}

TEST_CASE("causal_reduce on P4 and the empty graph") {
  auto r = causal_reduce(oracle::path({2, 3, 2, 1}));
  CHECK(r.kernel.empty());
  CHECK(r.offset() == 4);
  const auto sol = reconstruct_solution(r.kernel, r.trace, {});
  CHECK(weight_of(oracle::path({2, 3, 2, 1}), sol) == 4);

  auto e = causal_reduce(WeightedGraph{});
  CHECK(e.kernel.empty());
  CHECK(e.offset() == 0);
}

TEST_CASE("disable_step") {
  ReduceOptions o;
  disable_step(o, "covering");
  CHECK_FALSE(o.covering);
  CHECK(o.confining);
  CHECK_THROWS_AS(disable_step(o, "nope"), Error);
}

TEST_CASE("causal_reduce preserves alpha and reconstructs optimal solutions") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 4 + rng() % 13;
    const double p = std::vector<double>{0.1, 0.3, 0.5}[rng() % 3];
    const bool narrow = rng() % 2;
    auto g = oracle::random_graph(rng, n, p, narrow ? 20 : 1, narrow ? 100 : 200);
    const Weight a = oracle::alpha(g);
    auto r = causal_reduce(g);
    CHECK(r.kernel.check_invariants());
    CHECK(r.offset() + oracle::alpha(r.kernel) == a);
    const auto kernel_best = oracle::all_mwis(r.kernel).front();
    const auto sol = reconstruct_solution(r.kernel, r.trace, kernel_best);
    CHECK(is_independent(g, sol));
    CHECK(weight_of(g, sol) == a);

    ReductionTrace again;
    auto kernel = r.kernel;
    CHECK_FALSE(reduce_in_place(kernel, again));
  }
}

TEST_CASE("each step alone preserves alpha") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 150; ++round) {
    auto g = oracle::random_graph(rng, 4 + rng() % 11, 0.3, 1, round % 2 ? 4 : 200);
    const Weight a = oracle::alpha(g);
    for (int only = 0; only < 3; ++only) {
      ReduceOptions o;
      o.basic = only == 0;
      o.confining = only == 1;
      o.covering = only == 2;
      auto r = causal_reduce(g, o);
      CHECK(r.offset() + oracle::alpha(r.kernel) == a);
    }
  }
}
