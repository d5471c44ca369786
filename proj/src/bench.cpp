#include "mwis/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mwis/local_search.hpp"
#include "mwis/solver.hpp"
#include "mwis/verify.hpp"
#include "mwis/weights.hpp"

namespace mwis {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string ratio(std::size_t kernel_n, std::size_t n) {
  return fixed(n ? 100.0 * static_cast<double>(kernel_n) / static_cast<double>(n) : 0.0, 2);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

const std::vector<std::string>& columns_for(const std::string& algorithm) {
  static const std::vector<std::string> reduce = {
      "instance", "n", "m", "parse_secs", "time_secs", "kernel_n", "kernel_m", "offset",
      "ratio_percent", "status"};
  static const std::vector<std::string> ablation = {
      "instance", "variant", "n", "time_secs", "kernel_n", "kernel_m", "offset",
      "ratio_percent", "status"};
  static const std::vector<std::string> solve = {
      "instance", "n", "m", "parse_secs", "time_secs", "best_weight", "optimal", "nodes", "status"};
  static const std::vector<std::string> search = {
      "instance", "n", "m", "seed", "cit", "parse_secs", "time_secs", "best_is_weight",
      "best_cover_weight", "iterations", "cit_bulk_removals", "status"};
  if (algorithm == "reduce") return reduce;
  if (algorithm == "reduce-ablation") return ablation;
  if (algorithm == "solve") return solve;
  if (algorithm == "search" || algorithm == "search-nocit") return search;
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm " + algorithm);
}

std::vector<std::string> failed_row(const std::string& algorithm, const std::string& instance,
                                    const std::string& why) {
  std::vector<std::string> row(columns_for(algorithm).size());
  row.front() = instance;
  row.back() = "error: " + why;
  return row;
}

void add_reduce(BenchTable& t, const BenchConfig& c, const std::string& name,
                const WeightedGraph& g, double parse_secs) {
  const auto start = Clock::now();
  auto r = causal_reduce(g, c.reduce);
  const double secs = since(start);
  t.rows.push_back({name, std::to_string(g.alive_count()), std::to_string(g.edge_count()),
                    fixed(parse_secs), fixed(secs), std::to_string(r.kernel.alive_count()),
                    std::to_string(r.kernel.edge_count()), std::to_string(r.offset()),
                    ratio(r.kernel.alive_count(), g.alive_count()), "ok"});
}

void add_ablation(BenchTable& t, const BenchConfig& c, const std::string& name,
                  const WeightedGraph& g) {
  const std::vector<std::pair<std::string, std::pair<bool, bool>>> variants = {
      {"basic", {false, false}},
      {"+confining", {true, false}},
      {"+covering", {false, true}},
      {"full", {true, true}},
  };
  for (const auto& [label, steps] : variants) {
    ReduceOptions o = c.reduce;
    o.basic = true;
    o.confining = steps.first;
    o.covering = steps.second;
    const auto start = Clock::now();
    auto r = causal_reduce(g, o);
    const double secs = since(start);
    t.rows.push_back({name, label, std::to_string(g.alive_count()), fixed(secs),
                      std::to_string(r.kernel.alive_count()), std::to_string(r.kernel.edge_count()),
                      std::to_string(r.offset()), ratio(r.kernel.alive_count(), g.alive_count()),
                      "ok"});
  }
}

void add_solve(BenchTable& t, const BenchConfig& c, const std::string& name,
               const WeightedGraph& g, double parse_secs) {
  SolverOptions o;
  o.time_limit = c.solve_time_limit;
  o.reduce = c.reduce;
  const auto r = solve(g, o);
  const auto check = verify_solution(g, r.solution);
  t.rows.push_back({name, std::to_string(g.alive_count()), std::to_string(g.edge_count()),
                    fixed(parse_secs), fixed(r.elapsed), std::to_string(r.best_weight),
                    r.optimal ? "true" : "false", std::to_string(r.nodes),
                    check.weight == r.best_weight ? "ok" : "invalid"});
}

void add_search(BenchTable& t, const BenchConfig& c, const std::string& name,
                const WeightedGraph& g, double parse_secs, bool cit) {
  const auto start = Clock::now();
  auto kernel = causal_reduce(g, c.reduce);
  SearchOptions o;
  o.cutoff_secs = c.search_cutoff;
  o.max_iterations = c.search_iterations;
  o.seed = c.seed;
  o.cit = cit;
  o.budget = c.reduce.budget;
  const auto r = causal_search(kernel.kernel, o);
  const double secs = since(start);
  const auto solution = reconstruct_solution(kernel.kernel, kernel.trace, r.independent_set);
  const auto check = verify_solution(g, solution);
  const Weight is_weight = kernel.offset() + r.is_weight;
  t.rows.push_back({name, std::to_string(g.alive_count()), std::to_string(g.edge_count()),
                    std::to_string(c.seed), cit ? "on" : "off", fixed(parse_secs), fixed(secs),
                    std::to_string(is_weight), std::to_string(g.total_weight() - is_weight),
                    std::to_string(r.iterations), std::to_string(r.cit_bulk_removals),
                    check.weight == is_weight && check.cover_valid ? "ok" : "invalid"});
}

json cell_value(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty()) {
    char* end = nullptr;
    const long long i = std::strtoll(s.c_str(), &end, 10);
    if (*end == '\0') return i;
    const double d = std::strtod(s.c_str(), &end);
    if (*end == '\0') return d;
  }
  return s;
}

}  // namespace

WeightedGraph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  std::uint64_t state = seed;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return WeightedGraph::from_edges(std::vector<Weight>(n, 1), edges);
}

WeightedGraph load_instance(const InstanceSpec& spec) {
  if (spec.graph.rfind("random:", 0) == 0) {
    const auto parts = split(spec.graph, ':');
    if (parts.size() != 4) {
      throw Error(ErrorCode::MalformedInput, "expected random:N:P:SEED, got " + spec.graph);
    }
    std::size_t n = 0;
    double p = 0;
    std::uint64_t seed = 0;
    try {
      n = std::stoull(parts[1]);
      p = std::stod(parts[2]);
      seed = std::stoull(parts[3]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "bad random instance " + spec.graph);
    }
    if (p < 0 || p > 1) throw Error(ErrorCode::MalformedInput, "edge probability outside [0,1]");
    auto g = random_gnp(n, p, seed);
    if (spec.weights.empty()) return g;
    const auto gen = parse_weight_gen(spec.weights);
    if (!gen) throw Error(ErrorCode::MalformedInput, "random instances take gen:uniform weights");
    const auto w = gen_weights(n, *gen);
    for (VertexId v = 0; v < n; ++v) g.set_weight(v, w[v]);
    g.clear_history();
    return g;
  }
  LoadOptions o;
  o.format = spec.format;
  o.one_indexed = spec.one_indexed;
  if (!spec.weights.empty()) o.weights = spec.weights;
  return read_graph_file(spec.graph, o);
}

BenchConfig parse_bench_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bench config: ") + e.what());
  }
  BenchConfig c;
  try {
    for (const auto& item : j.at("instances")) {
      InstanceSpec s;
      if (item.is_string()) {
        s.graph = item.get<std::string>();
      } else {
        s.graph = item.at("graph").get<std::string>();
        s.weights = item.value("weights", "");
        s.one_indexed = item.value("one_indexed", false);
        s.name = item.value("name", "");
        if (item.contains("format")) {
          s.format = parse_format_name(item["format"].get<std::string>());
          if (!s.format) throw Error(ErrorCode::MalformedInput, "unknown format in bench config");
        }
      }
      c.instances.push_back(std::move(s));
    }
    c.algorithms = j.value("algorithms", std::vector<std::string>{"reduce"});
    c.solve_time_limit = j.value("solve_time_limit", c.solve_time_limit);
    c.search_cutoff = j.value("search_cutoff", c.search_cutoff);
    if (j.contains("search_iterations")) c.search_iterations = j["search_iterations"].get<std::uint64_t>();
    c.seed = j.value("seed", c.seed);
    for (const auto& step : j.value("disable_steps", std::vector<std::string>{})) {
      disable_step(c.reduce, step);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bench config: ") + e.what());
  }
  if (c.instances.empty()) throw Error(ErrorCode::MalformedInput, "bench config has no instances");
  for (const auto& a : c.algorithms) columns_for(a);
  return c;
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.instances.empty()) throw Error(ErrorCode::InvalidArgument, "no instances");
  BenchResult result;
  for (const auto& a : config.algorithms) {
    result.tables.push_back({a, columns_for(a), {}});
  }
  for (const auto& spec : config.instances) {
    std::string name = spec.name;
    if (name.empty()) {
      name = spec.graph.rfind("random:", 0) == 0
                 ? spec.graph
                 : std::filesystem::path(spec.graph).filename().string();
    }
    WeightedGraph g;
    double parse_secs = 0;
    std::string load_error;
    try {
      const auto start = Clock::now();
      g = load_instance(spec);
      parse_secs = since(start);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (auto& table : result.tables) {
      if (!load_error.empty()) {
        table.rows.push_back(failed_row(table.name, name, load_error));
        continue;
      }
      try {
        if (table.name == "reduce") add_reduce(table, config, name, g, parse_secs);
        if (table.name == "reduce-ablation") add_ablation(table, config, name, g);
        if (table.name == "solve") add_solve(table, config, name, g, parse_secs);
        if (table.name == "search") add_search(table, config, name, g, parse_secs, true);
        if (table.name == "search-nocit") add_search(table, config, name, g, parse_secs, false);
      } catch (const std::exception& e) {
        table.rows.push_back(failed_row(table.name, name, e.what()));
      }
    }
  }
  return result;
}

std::string to_csv(const BenchTable& table) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + quote(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const BenchResult& result) {
  json out = json::object();
  for (const auto& table : result.tables) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r = json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i]] = cell_value(row[i]);
      rows.push_back(std::move(r));
    }
    out[table.name] = std::move(rows);
  }
  return out.dump(2) + "\n";
}

void write_bench(const BenchResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& table : result.tables) {
    std::ofstream(dir / (table.name + ".csv")) << to_csv(table);
  }
  std::ofstream(dir / "results.json") << to_json(result);
}

}  // namespace mwis
