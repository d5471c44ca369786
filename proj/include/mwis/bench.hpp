#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mwis/io.hpp"
#include "mwis/reduce.hpp"

namespace mwis {

// G(n, p) drawn with splitmix64: edge {u, v} (u < v, row-major order) is kept
// when the top 53 bits of the next output, as a fraction of 2^53, are below p.
// Weights default to 1.
WeightedGraph random_gnp(std::size_t n, double p, std::uint64_t seed);

struct InstanceSpec {
  std::string graph;    // file path or random:N:P:SEED
  std::string weights;  // empty, a file path or gen:uniform:LO:HI:SEED
  std::optional<GraphFormat> format;
  bool one_indexed = false;
  std::string name;     // defaults to the file name or the random spec
};

WeightedGraph load_instance(const InstanceSpec& spec);

struct BenchConfig {
  std::vector<InstanceSpec> instances;
  std::vector<std::string> algorithms;  // reduce, reduce-ablation, solve, search, search-nocit
  ReduceOptions reduce;
  double solve_time_limit = 1000;
  double search_cutoff = 5;
  std::optional<std::uint64_t> search_iterations;
  std::uint64_t seed = 0;
};

// Reads a JSON config: {"instances": [{"graph", "weights", "format", "one_indexed", "name"}],
// "algorithms": [...], "solve_time_limit", "search_cutoff", "search_iterations", "seed",
// "disable_steps": [...]}. Throws MalformedInput or InvalidArgument.
BenchConfig parse_bench_config(const std::string& json_text);

struct BenchTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct BenchResult {
  std::vector<BenchTable> tables;  // one per algorithm, in config order
};

// Runs every (instance, algorithm) cell. A failing cell becomes a row whose
// status column holds the error; the run continues.
BenchResult run_bench(const BenchConfig& config);

std::string to_csv(const BenchTable& table);
std::string to_json(const BenchResult& result);

// Writes <dir>/<table>.csv for every table and <dir>/results.json.
void write_bench(const BenchResult& result, const std::filesystem::path& dir);

}  // namespace mwis
