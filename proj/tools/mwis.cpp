#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwis/bench.hpp"
#include "mwis/cit.hpp"
#include "mwis/io.hpp"
#include "mwis/local_search.hpp"
#include "mwis/reduce.hpp"
#include "mwis/solver.hpp"
#include "mwis/verify.hpp"
#include "mwis/weights.hpp"

using namespace mwis;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kVerifyFailed = 3;

struct GraphArgs {
  std::string in;
  std::string weights;
  bool one_indexed = false;
};

struct Globals {
  std::string format;
  std::uint64_t seed = 0;
  bool json = false;
};

struct Loaded {
  WeightedGraph graph;
  VertexId base = 0;  // label of vertex 0 in files and output
  double parse_secs = 0;
};

Loaded load(const GraphArgs& a, const Globals& gl) {
  LoadOptions o;
  if (!gl.format.empty()) {
    o.format = parse_format_name(gl.format);
    if (!o.format) throw Error(ErrorCode::MalformedInput, "unknown format " + gl.format);
  }
  o.one_indexed = a.one_indexed;
  if (!a.weights.empty()) o.weights = a.weights;
  const auto start = std::chrono::steady_clock::now();
  Loaded out;
  out.graph = read_graph_file(a.in, o);
  out.parse_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto format = o.format ? *o.format : *format_from_extension(a.in);
  out.base = format == GraphFormat::EdgeList && !a.one_indexed ? 0 : 1;
  return out;
}

json labels(std::span<const VertexId> set, VertexId base) {
  json out = json::array();
  for (VertexId v : set) out.push_back(std::uint64_t{v} + base);
  return out;
}

void write_solution_file(const std::string& path, std::span<const VertexId> set, VertexId base) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  VertexList shifted;
  for (VertexId v : set) shifted.push_back(v + base);
  write_solution(out, shifted);
}

void emit(const json& stats, const std::string& path, const Globals& gl) {
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    out << stats.dump(2) << '\n';
  }
  if (gl.json || path.empty()) std::cout << stats.dump(2) << '\n';
}

json rule_json(const RuleStats& r) {
  return {{"removed", r.removed}, {"included", r.included}, {"contracted", r.contracted},
          {"millis", r.millis}};
}

json trace_json(const ReductionTrace& trace, VertexId base) {
  json events = json::array();
  for (const auto& e : trace.events()) {
    if (const auto* inc = std::get_if<IncludeVertex>(&e)) {
      events.push_back({{"type", "include"}, {"vertex", inc->vertex + base},
                        {"weight", inc->weight}, {"removed", labels(inc->removed, base)}});
    } else if (const auto* exc = std::get_if<ExcludeVertex>(&e)) {
      events.push_back({{"type", "exclude"}, {"vertex", exc->vertex + base}});
    } else if (const auto* con = std::get_if<ContractSet>(&e)) {
      events.push_back({{"type", "contract"}, {"members", labels(con->members, base)},
                        {"merged", con->merged + base}});
    } else if (const auto* fold = std::get_if<FoldPendant>(&e)) {
      events.push_back({{"type", "fold"}, {"pendant", fold->pendant + base},
                        {"neighbor", fold->neighbor + base}, {"weight", fold->weight}});
    }
  }
  return {{"offset", trace.offset()}, {"events", events}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum weight independent set / minimum weight vertex cover toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Graph format: metis, dimacs or edges (default: from extension)");
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_flag("--json", gl.json, "Print the JSON report on stdout");

  auto graph_options = [](CLI::App* sub, GraphArgs& a) {
    sub->add_option("--in", a.in, "Graph file")->required();
    sub->add_option("--weights", a.weights, "Weight file or gen:uniform:LO:HI:SEED");
    sub->add_flag("--one-indexed", a.one_indexed, "Edge list ids start at 1");
  };

  // reduce
  GraphArgs reduce_in;
  std::string out_kernel, out_trace, reduce_stats;
  std::vector<std::string> disabled;
  auto* reduce_cmd = app.add_subcommand("reduce", "Kernelize a graph");
  graph_options(reduce_cmd, reduce_in);
  reduce_cmd->add_option("--out-kernel", out_kernel, "Kernel in METIS format");
  reduce_cmd->add_option("--out-trace", out_trace, "Reduction events as JSON");
  reduce_cmd->add_option("--stats", reduce_stats, "Statistics JSON");
  reduce_cmd->add_option("--disable-step", disabled, "basic, confining or covering");

  // solve
  GraphArgs solve_in;
  double time_limit = 1000;
  std::string constraints = "on", branching = "confining", solve_out, solve_stats;
  auto* solve_cmd = app.add_subcommand("solve", "Exact branch and reduce");
  graph_options(solve_cmd, solve_in);
  solve_cmd->add_option("--time-limit", time_limit, "Seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--constraints", constraints)->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_option("--branching", branching)->check(CLI::IsMember({"confining", "plain"}));
  solve_cmd->add_option("--out-solution", solve_out, "Independent set, one id per line");
  solve_cmd->add_option("--stats", solve_stats, "Statistics JSON");

  // search
  GraphArgs search_in;
  std::string cutoff = "5", cit = "on", search_out, search_stats;
  bool no_reduce = false;
  auto* search_cmd = app.add_subcommand("search", "Local search for a light vertex cover");
  graph_options(search_cmd, search_in);
  search_cmd->add_option("--cutoff", cutoff, "Seconds, or iters:N");
  search_cmd->add_option("--cit", cit)->check(CLI::IsMember({"on", "off"}));
  search_cmd->add_flag("--no-reduce", no_reduce, "Search the input graph instead of its kernel");
  search_cmd->add_option("--out-solution", search_out, "Independent set, one id per line");
  search_cmd->add_option("--stats", search_stats, "Statistics JSON");

  // verify
  GraphArgs verify_in;
  std::string solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check an independent set");
  graph_options(verify_cmd, verify_in);
  verify_cmd->add_option("--solution", solution_path, "One id per line")->required();

  // explain
  GraphArgs explain_in;
  std::uint64_t vertex_label = 0;
  auto* explain_cmd = app.add_subcommand("explain", "Confining and covering sets of a vertex");
  graph_options(explain_cmd, explain_in);
  explain_cmd->add_option("--vertex", vertex_label, "Vertex label")->required();

  // gen-weights
  std::size_t gen_n = 0;
  std::string gen_graph, gen_out;
  Weight lo = 1, hi = 200;
  auto* gen_cmd = app.add_subcommand("gen-weights", "Uniform random integer weights");
  gen_cmd->add_option("--n", gen_n, "Number of weights");
  gen_cmd->add_option("--in", gen_graph, "Take n from this graph");
  gen_cmd->add_option("--lo", lo, "Smallest weight");
  gen_cmd->add_option("--hi", hi, "Largest weight");
  gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  // bench
  std::string bench_config, bench_dir = "bench_out", bench_weights;
  std::vector<std::string> bench_instances, bench_algorithms;
  double bench_limit = 1000;
  std::string bench_cutoff = "5";
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment matrix");
  bench_cmd->add_option("--config", bench_config, "JSON config");
  bench_cmd->add_option("--instance", bench_instances, "Graph path or random:N:P:SEED");
  bench_cmd->add_option("--weights", bench_weights, "Weights for --instance entries");
  bench_cmd->add_option("--algorithms", bench_algorithms,
                        "reduce, reduce-ablation, solve, search, search-nocit")
      ->delimiter(',');
  bench_cmd->add_option("--time-limit", bench_limit, "Solver seconds");
  bench_cmd->add_option("--cutoff", bench_cutoff, "Search seconds, or iters:N");
  bench_cmd->add_option("--out-dir", bench_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  auto parse_cutoff = [](const std::string& text, double& secs,
                         std::optional<std::uint64_t>& iters) {
    try {
      if (text.rfind("iters:", 0) == 0) {
        iters = std::stoull(text.substr(6));
      } else {
        secs = std::stod(text);
        if (secs <= 0) throw Error(ErrorCode::InvalidArgument, "cutoff must be positive");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad cutoff " + text);
    }
  };

  try {
    if (*reduce_cmd) {
      const auto in = load(reduce_in, gl);
      ReduceOptions o;
      for (const auto& step : disabled) disable_step(o, step);
      const auto start = std::chrono::steady_clock::now();
      auto r = causal_reduce(in.graph, o);
      const double millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      VertexList kept;
      if (!out_kernel.empty()) {
        std::ofstream out(out_kernel);
        if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + out_kernel);
        kept = write_metis(out, r.kernel);
      } else {
        kept = r.kernel.alive_vertices();
      }
      if (!out_trace.empty()) {
        json t = trace_json(r.trace, in.base);
        t["kernel_vertices"] = labels(kept, in.base);
        std::ofstream out(out_trace);
        if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + out_trace);
        out << t.dump(2) << '\n';
      }
      const auto n = in.graph.alive_count();
      json stats = {{"n", n},
                    {"m", in.graph.edge_count()},
                    {"kernel_n", r.kernel.alive_count()},
                    {"kernel_m", r.kernel.edge_count()},
                    {"offset", r.offset()},
                    {"ratio_percent", n ? 100.0 * r.kernel.alive_count() / n : 0.0},
                    {"per_rule",
                     {{"basic", rule_json(r.stats.basic)},
                      {"confining", rule_json(r.stats.confining)},
                      {"covering", rule_json(r.stats.covering)}}},
                    {"total_millis", millis},
                    {"parse_millis", in.parse_secs * 1000}};
      emit(stats, reduce_stats, gl);
      return kOk;
    }

    if (*solve_cmd) {
      const auto in = load(solve_in, gl);
      SolverOptions o;
      o.time_limit = time_limit;
      o.constraints = constraints == "on";
      o.branching = branching == "plain" ? Branching::Plain : Branching::Confining;
      const auto r = solve(in.graph, o);
      if (!solve_out.empty()) write_solution_file(solve_out, r.solution, in.base);
      json stats = {{"best_weight", r.best_weight},
                    {"optimal", r.optimal},
                    {"nodes", r.nodes},
                    {"prunes_bound", r.prunes_bound},
                    {"prunes_constraint", r.prunes_constraint},
                    {"simplifications", r.simplifications},
                    {"elapsed_secs", r.elapsed}};
      emit(stats, solve_stats, gl);
      return kOk;
    }

    if (*search_cmd) {
      const auto in = load(search_in, gl);
      SearchOptions o;
      parse_cutoff(cutoff, o.cutoff_secs, o.max_iterations);
      o.seed = gl.seed;
      o.cit = cit == "on";
      const auto start = std::chrono::steady_clock::now();
      KernelResult k;
      if (no_reduce) {
        k.kernel = in.graph;
      } else {
        k = causal_reduce(in.graph);
      }
      const auto r = causal_search(k.kernel, o);
      const auto solution = reconstruct_solution(k.kernel, k.trace, r.independent_set);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const auto check = verify_solution(in.graph, solution);
      if (!check.cover_valid) {
        std::cerr << "search produced an invalid cover\n";
        return kVerifyFailed;
      }
      if (!search_out.empty()) write_solution_file(search_out, solution, in.base);
      json stats = {{"best_is_weight", check.weight},
                    {"best_cover_weight", check.cover_weight},
                    {"iterations", r.iterations},
                    {"cit_bulk_removals", r.cit_bulk_removals},
                    {"elapsed_secs", secs},
                    {"seed", gl.seed}};
      emit(stats, search_stats, gl);
      return kOk;
    }

    if (*verify_cmd) {
      const auto in = load(verify_in, gl);
      std::ifstream file(solution_path);
      if (!file) throw Error(ErrorCode::MalformedInput, "cannot open " + solution_path);
      VertexList ids;
      try {
        for (VertexId label : read_solution(file)) {
          if (label < in.base || !in.graph.contains(label - in.base)) {
            throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(label));
          }
          ids.push_back(label - in.base);
        }
        const auto r = verify_solution(in.graph, ids, in.base);
        json out = {{"independent", true},
                    {"size", r.size},
                    {"weight", r.weight},
                    {"cover_weight", r.cover_weight},
                    {"cover_valid", r.cover_valid}};
        std::cout << out.dump(2) << '\n';
        return r.cover_valid ? kOk : kVerifyFailed;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotIndependent && e.code() != ErrorCode::UnknownVertex) throw;
        json out = {{"independent", false}, {"error", to_string(e.code())}, {"message", e.what()}};
        std::cout << out.dump(2) << '\n';
        return kVerifyFailed;
      }
    }

    if (*explain_cmd) {
      const auto in = load(explain_in, gl);
      if (vertex_label < in.base || !in.graph.contains(static_cast<VertexId>(vertex_label - in.base))) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(vertex_label));
      }
      const auto v = static_cast<VertexId>(vertex_label - in.base);
      const auto& g = in.graph;
      const auto conf = compute_confining(g, v);
      const auto cov = compute_covering(g, v);
      json out = {{"vertex", vertex_label},
                  {"weight", g.weight(v)},
                  {"confining", {{"confined", conf.confined}, {"set", labels(conf.set, in.base)}}},
                  {"covering", {{"covered", cov.covered}, {"set", labels(cov.set, in.base)}}},
                  {"inferred_confining", labels(inferred_confining(g, v), in.base)},
                  {"inferred_covering", labels(inferred_covering(g, v), in.base)}};
      std::cout << out.dump(2) << '\n';
      return kOk;
    }

    if (*gen_cmd) {
      std::size_t n = gen_n;
      if (!gen_graph.empty()) {
        GraphArgs a;
        a.in = gen_graph;
        n = load(a, gl).graph.alive_count();
      }
      if (n == 0) throw Error(ErrorCode::InvalidArgument, "pass --n >= 1 or --in");
      const auto w = gen_weights(n, {lo, hi, gl.seed});
      std::ostringstream text;
      for (Weight x : w) text << x << '\n';
      if (gen_out.empty()) {
        std::cout << text.str();
      } else {
        std::ofstream out(gen_out);
        if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + gen_out);
        out << text.str();
      }
      return kOk;
    }

    if (*bench_cmd) {
      BenchConfig c;
      if (!bench_config.empty()) {
        std::ifstream file(bench_config);
        if (!file) throw Error(ErrorCode::MalformedInput, "cannot open " + bench_config);
        std::stringstream text;
        text << file.rdbuf();
        c = parse_bench_config(text.str());
      } else {
        c.algorithms = {"reduce"};
        c.seed = gl.seed;
        c.solve_time_limit = bench_limit;
        parse_cutoff(bench_cutoff, c.search_cutoff, c.search_iterations);
      }
      for (const auto& path : bench_instances) {
        InstanceSpec s;
        s.graph = path;
        s.weights = bench_weights;
        if (!gl.format.empty()) s.format = parse_format_name(gl.format);
        c.instances.push_back(s);
      }
      if (!bench_algorithms.empty()) c.algorithms = bench_algorithms;
      if (c.instances.empty()) throw Error(ErrorCode::InvalidArgument, "no bench instances");
      const auto result = run_bench(c);
      write_bench(result, bench_dir);
      if (gl.json) std::cout << to_json(result);
      for (const auto& t : result.tables) {
        std::cerr << t.name << ": " << t.rows.size() << " rows -> "
                  << (std::filesystem::path(bench_dir) / (t.name + ".csv")).string() << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
