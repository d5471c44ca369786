#include <doctest.h>

#include <sstream>

#include "mwis/bench.hpp"
#include "mwis/verify.hpp"
#include "mwis/weights.hpp"
#include "support/oracle.hpp"

using namespace mwis;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::size_t column(const BenchTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

BenchConfig random_config(std::size_t count, const std::string& shape) {
  BenchConfig c;
  for (std::size_t i = 0; i < count; ++i) {
    c.instances.push_back({"random:" + shape + ":" + std::to_string(i + 1),
                           "gen:uniform:1:200:" + std::to_string(i + 1), std::nullopt, false, ""});
  }
  return c;
}

}  // namespace

TEST_CASE("verify on P3") {
  const auto g = oracle::path({1, 3, 1});
  const VertexList mid = {1};
  const auto r = verify_solution(g, mid);
  CHECK(r.weight == 3);
  CHECK(r.cover_weight == 2);
  CHECK(r.cover_valid);
  CHECK(r.size == 1);

  const VertexList pair = {0, 1};
  CHECK(code_of([&] { verify_solution(g, pair); }) == ErrorCode::NotIndependent);
  try {
    verify_solution(g, pair, 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }

  const auto empty = verify_solution(g, VertexList{});
  CHECK(empty.weight == 0);
  CHECK(empty.cover_weight == 5);
  CHECK(empty.cover_valid);

  const VertexList outside = {3};
  CHECK(code_of([&] { verify_solution(g, outside); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("gen_weights mean and bounds") {
  for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
    const auto w = gen_weights(10000, {1, 200, seed});
    double sum = 0;
    for (Weight x : w) {
      CHECK(x >= 1);
      CHECK(x <= 200);
      sum += static_cast<double>(x);
    }
    const double mean = sum / 10000;
    CHECK(mean >= 95);
    CHECK(mean <= 106);
  }
  CHECK(code_of([] { gen_weights(3, {0, 5, 1}); }) == ErrorCode::BadBounds);
}

TEST_CASE("bench reduce table has one row per instance") {
  auto c = random_config(3, "40:0.1");
  c.algorithms = {"reduce"};
  const auto r = run_bench(c);
  REQUIRE(r.tables.size() == 1);
  const auto& t = r.tables[0];
  CHECK(t.rows.size() == 3);
  const auto n = column(t, "n");
  const auto kn = column(t, "kernel_n");
  const auto ratio = column(t, "ratio_percent");
  column(t, "time_secs");
  for (const auto& row : t.rows) {
    CHECK(std::stod(row[ratio]) == doctest::Approx(100.0 * std::stod(row[kn]) / std::stod(row[n])));
  }
  const auto csv = to_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("bench output is reproducible apart from timing") {
  auto c = random_config(2, "50:0.15");
  c.algorithms = {"reduce", "solve", "search"};
  c.search_iterations = 200;
  auto strip = [](BenchResult r) {
    for (auto& t : r.tables) {
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i].ends_with("_secs")) {
          for (auto& row : t.rows) row[i].clear();
        }
      }
    }
    std::string out;
    for (const auto& t : r.tables) out += to_csv(t);
    return out;
  };
  CHECK(strip(run_bench(c)) == strip(run_bench(c)));
}

TEST_CASE("bench solve cell past its time limit is not optimal") {
  auto c = random_config(1, "400:0.3");
  c.algorithms = {"solve"};
  c.solve_time_limit = 0.01;
  const auto r = run_bench(c);
  const auto& t = r.tables[0];
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][column(t, "optimal")] == "false");
  CHECK(std::stoll(t.rows[0][column(t, "best_weight")]) > 0);
}

TEST_CASE("bench records a failing cell and continues") {
  BenchConfig c;
  c.instances.push_back({"/nonexistent/graph.metis", "", std::nullopt, false, "missing"});
  c.instances.push_back({"random:20:0.2:5", "", std::nullopt, false, ""});
  c.algorithms = {"reduce"};
  const auto r = run_bench(c);
  const auto& t = r.tables[0];
  REQUIRE(t.rows.size() == 2);
  const auto status = column(t, "status");
  CHECK(t.rows[0][status].starts_with("error"));
  CHECK(t.rows[1][status] == "ok");
}

TEST_CASE("ablation kernels shrink from basic to full") {
  auto c = random_config(100, "60:0.06");
  c.algorithms = {"reduce-ablation"};
  const auto r = run_bench(c);
  const auto& t = r.tables[0];
  REQUIRE(t.rows.size() == 400);
  const auto kn = column(t, "kernel_n");
  const auto variant = column(t, "variant");
  int monotone = 0;
  for (std::size_t i = 0; i < t.rows.size(); i += 4) {
    CHECK(t.rows[i][variant] == "basic");
    CHECK(t.rows[i + 3][variant] == "full");
    const auto basic = std::stoul(t.rows[i][kn]);
    const auto conf = std::stoul(t.rows[i + 1][kn]);
    const auto cov = std::stoul(t.rows[i + 2][kn]);
    const auto full = std::stoul(t.rows[i + 3][kn]);
    if (basic >= conf && basic >= cov && conf >= full && cov >= full) ++monotone;
  }
  CHECK(monotone >= 90);
}
