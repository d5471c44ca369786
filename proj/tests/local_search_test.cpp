#include <doctest.h>

#include <random>

#include "mwis/local_search.hpp"
#include "mwis/solver.hpp"
#include "support/oracle.hpp"

using namespace mwis;

TEST_CASE("construct_cover examples") {
  std::mt19937_64 rng(1);
  const std::vector<Edge> one = {{0, 1}};
  CHECK(construct_cover(WeightedGraph::from_edges({1, 9}, one), rng) == VertexList{0});
  CHECK(construct_cover(WeightedGraph({3, 4, 5}), rng).empty());
  CHECK(construct_cover(oracle::clique({5, 2, 9}), rng) == VertexList{0, 1});

  for (int round = 0; round < 100; ++round) {
    auto g = oracle::random_graph(rng, 2 + rng() % 30, 0.3, 1, 50);
    const auto c = construct_cover(g, rng);
    CHECK(is_vertex_cover(g, c));
    SearchState s(g, c);
    for (VertexId v : c) CHECK(s.free_neighbors(v) > 0);
  }
}

TEST_CASE("loss and valid_score") {
  // star 0 (w5) with leaves 1 (w1), 2 (w2), 3 (w4)
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  auto g = WeightedGraph::from_edges({5, 1, 2, 4}, star);
  SearchState s(g, std::vector<VertexId>{0, 3});
  CHECK(s.loss(3) == Loss{0, 4});
  CHECK(s.loss(3).value() == 0.0);
  CHECK(s.valid_score(0) == -2);
  CHECK(s.loss(0) == Loss{2, 5});
  CHECK_THROWS_AS(s.loss(1), Error);
  CHECK_THROWS_AS(s.valid_score(2), Error);

  SearchState all(g, std::vector<VertexId>{0, 1, 2, 3});
  CHECK(all.valid_score(0) == -5);

  const std::vector<Edge> e = {{0, 1}};
  auto pendant = WeightedGraph::from_edges({4, 4}, e);
  SearchState p(pendant, std::vector<VertexId>{0});
  CHECK(p.loss(0).value() == doctest::Approx(0.25));
  auto swap = WeightedGraph::from_edges({2, 4}, e);
  SearchState q(swap, std::vector<VertexId>{0});
  CHECK(q.valid_score(0) == 2);

  auto heavy = WeightedGraph::from_edges({2, 1, 1, 1}, star);
  SearchState h(heavy, std::vector<VertexId>{0});
  CHECK(h.loss(0).value() == doctest::Approx(1.5));
}

TEST_CASE("remove_vertices takes the inferred confining set") {
  const std::vector<Edge> edges = {{0, 1}, {0, 3}, {1, 5}, {2, 5}, {3, 4}};
  auto g = WeightedGraph::from_edges({5, 4, 2, 2, 3, 3}, edges);
  CHECK(inferred_confining(g, 2) == VertexList{1, 2, 3});
  const VertexList cover = {0, 2, 3, 4, 5};
  SearchOptions o;
  SearchState s(g, cover);
  CHECK(remove_vertices(s, o) == VertexList{4, 2, 3});
  CHECK(s.bulk_removals == 1);

  o.cit = false;
  SearchState plain(g, cover);
  // removed degree 2 is below 2·(10/6), so a BMS vertex follows
  const auto removed = remove_vertices(plain, o);
  REQUIRE(removed.size() == 3);
  CHECK(removed[0] == 4);
  CHECK(removed[1] == 2);
  CHECK(plain.bulk_removals == 0);

  SearchState none(g, std::vector<VertexId>{});
  CHECK_THROWS_AS(remove_vertices(none, o), Error);
}

TEST_CASE("BMS removal depends on the removed degree") {
  // K4 plus pendant 4 on 3: average degree 14/5, threshold 5.6
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}};
  auto g = WeightedGraph::from_edges({3, 3, 3, 3, 1}, edges);
  SearchOptions o;
  o.cit = false;
  SearchState s(g, std::vector<VertexId>{0, 1, 2, 3});
  // two degree-3 removals reach 6 >= 5.6
  CHECK(remove_vertices(s, o).size() == 2);

  auto light = WeightedGraph::from_edges({3, 3, 3, 3, 9}, edges);
  SearchState t(light, std::vector<VertexId>{0, 1, 2, 4});
  // 4 (degree 1) leaves with another vertex: 1 + 3 < 5.6
  const auto removed = remove_vertices(t, o);
  CHECK(removed.size() == 3);
}

TEST_CASE("causal_search small cases") {
  auto e = causal_search(WeightedGraph({1, 2}));
  CHECK(e.cover.empty());
  CHECK(e.cover_weight == 0);
  CHECK(e.is_weight == 3);

  SearchOptions o;
  o.max_iterations = 200;
  auto k3 = causal_search(oracle::clique({5, 2, 9}), o);
  CHECK(k3.cover_weight == 7);
  CHECK(k3.independent_set == VertexList{2});
}

TEST_CASE("search keeps a valid cover every iteration") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 5; ++round) {
    auto g = oracle::random_graph(rng, 40 + rng() % 40, 0.1, 1, 100);
    SearchOptions o;
    o.max_iterations = 2000;
    o.seed = round;
    std::size_t invalid = 0;
    std::size_t calls = 0;
    o.observer = [&](const SearchState& s) {
      ++calls;
      if (s.uncovered_count() != 0 || !is_vertex_cover(g, s.cover())) ++invalid;
      if (weight_of(g, s.cover()) != s.cover_weight()) ++invalid;
    };
    const auto r = causal_search(g, o);
    CHECK(invalid == 0);
    CHECK(calls == 2000);
    CHECK(r.iterations == 2000);
    CHECK(is_vertex_cover(g, r.cover));
    CHECK(weight_of(g, r.cover) == r.cover_weight);
    CHECK(is_independent(g, r.independent_set));
    CHECK(r.cover_weight + r.is_weight == g.total_weight());
  }
}

TEST_CASE("search is deterministic under an iteration cutoff") {
  std::mt19937_64 rng(5);
  auto g = oracle::random_graph(rng, 80, 0.1, 1, 100);
  SearchOptions o;
  o.max_iterations = 3000;
  o.seed = 99;
  const auto a = causal_search(g, o);
  const auto b = causal_search(g, o);
  CHECK(a.cover == b.cover);
  CHECK(a.cover_weight == b.cover_weight);
}

TEST_CASE("search finds optima of small graphs") {
  std::mt19937_64 rng(31);
  int hit = 0;
  for (int round = 0; round < 40; ++round) {
    auto g = oracle::random_graph(rng, 30, 0.2, 20, 100);
    const Weight best = solve(g).best_weight;
    SearchOptions o;
    o.max_iterations = 20000;
    o.seed = round;
    o.target_cover_weight = g.total_weight() - best;
    const auto r = causal_search(g, o);
    CHECK(r.cover_weight >= g.total_weight() - best);
    if (r.is_weight == best) ++hit;
  }
  CHECK(hit >= 38);
}
