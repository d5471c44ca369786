#include "mwis/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mwis/weights.hpp"

namespace mwis {

namespace {

[[noreturn]] void malformed(const std::string& what, std::size_t line) {
  throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line) + ": " + what);
}

// Reads one id-like integer and converts it to a 0-based VertexId.
VertexId to_vertex(long long raw, bool one_indexed, std::size_t line) {
  const long long id = one_indexed ? raw - 1 : raw;
  if (id < 0 || id >= static_cast<long long>(kNoVertex)) {
    malformed("vertex id " + std::to_string(raw) + " out of range", line);
  }
  return static_cast<VertexId>(id);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::optional<GraphFormat> parse_format_name(const std::string& name) {
  const auto n = lowercase(name);
  if (n == "metis") return GraphFormat::Metis;
  if (n == "dimacs") return GraphFormat::Dimacs;
  if (n == "edges" || n == "edgelist") return GraphFormat::EdgeList;
  return std::nullopt;
}

std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path) {
  const auto ext = lowercase(path.extension().string());
  if (ext == ".graph" || ext == ".metis") return GraphFormat::Metis;
  if (ext == ".dimacs" || ext == ".clq" || ext == ".col" || ext == ".wclq") {
    return GraphFormat::Dimacs;
  }
  if (ext == ".edges" || ext == ".txt" || ext == ".el") return GraphFormat::EdgeList;
  return std::nullopt;
}

ParsedGraph parse_metis(std::istream& in) {
  ParsedGraph out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  bool weighted = false;
  long long declared_edges = 0;
  VertexId current = 0;
  std::size_t arcs = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n = 0;
      if (!(fields >> n >> declared_edges)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        malformed("expected header `n m [fmt]`", line_no);
      }
      std::string fmt = "0";
      fields >> fmt;
      if (n < 0 || declared_edges < 0) malformed("negative counts in header", line_no);
      if (fmt == "10") {
        weighted = true;
      } else if (fmt != "0" && fmt != "00" && fmt != "000") {
        malformed("unsupported METIS fmt " + fmt + " (edge weights are not supported)",
                  line_no);
      }
      out.vertex_count = static_cast<std::size_t>(n);
      if (weighted) out.weights.emplace();
      have_header = true;
      continue;
    }
    if (current >= out.vertex_count) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      malformed("more vertex lines than declared", line_no);
    }
    if (weighted) {
      long long w = 0;
      if (!(fields >> w)) malformed("missing vertex weight", line_no);
      out.weights->push_back(w);
    }
    long long raw = 0;
    while (fields >> raw) {
      const VertexId u = to_vertex(raw, true, line_no);
      if (u >= out.vertex_count) malformed("neighbor " + std::to_string(raw) + " out of range", line_no);
      if (u == current) malformed("self-loop on vertex " + std::to_string(raw), line_no);
      ++arcs;
      if (current < u) out.edges.emplace_back(current, u);
    }
    if (!fields.eof()) malformed("non-numeric token", line_no);
    ++current;
  }
  if (!have_header) malformed("missing header", line_no);
  if (current != out.vertex_count) {
    malformed("expected " + std::to_string(out.vertex_count) + " vertex lines, found " +
                  std::to_string(current),
              line_no);
  }
  if (arcs != 2 * static_cast<std::size_t>(declared_edges)) {
    malformed("header declares " + std::to_string(declared_edges) + " edges but lists " +
                  std::to_string(arcs) + " arcs",
              line_no);
  }
  return out;
}

ParsedGraph parse_dimacs(std::istream& in) {
  ParsedGraph out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::vector<Weight> weights;
  std::vector<char> weight_seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = 0, m = 0;
      if (!(fields >> kind >> n >> m) || n < 0 || m < 0) malformed("bad problem line", line_no);
      out.vertex_count = static_cast<std::size_t>(n);
      weights.assign(out.vertex_count, 1);
      weight_seen.assign(out.vertex_count, 0);
      have_header = true;
    } else if (tag == "v" || tag == "n") {
      if (!have_header) malformed("vertex line before problem line", line_no);
      long long id = 0, w = 0;
      if (!(fields >> id >> w)) malformed("bad vertex line", line_no);
      const VertexId v = to_vertex(id, true, line_no);
      if (v >= out.vertex_count) malformed("vertex " + std::to_string(id) + " out of range", line_no);
      weights[v] = w;
      weight_seen[v] = 1;
    } else if (tag == "e") {
      if (!have_header) malformed("edge line before problem line", line_no);
      long long a = 0, b = 0;
      if (!(fields >> a >> b)) malformed("bad edge line", line_no);
      const VertexId u = to_vertex(a, true, line_no);
      const VertexId v = to_vertex(b, true, line_no);
      if (u >= out.vertex_count || v >= out.vertex_count) malformed("edge endpoint out of range", line_no);
      if (u == v) malformed("self-loop on vertex " + std::to_string(a), line_no);
      out.edges.emplace_back(u, v);
    } else {
      malformed("unknown line tag '" + tag + "'", line_no);
    }
  }
  if (!have_header) malformed("missing problem line", line_no);
  if (std::any_of(weight_seen.begin(), weight_seen.end(), [](char c) { return c != 0; })) {
    out.weights = std::move(weights);
  }
  return out;
}

ParsedGraph parse_edge_list(std::istream& in, bool one_indexed) {
  ParsedGraph out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#' || line[0] == '%') {
        continue;
      }
      malformed("expected `u v`", line_no);
    }
    if (!(fields >> b)) malformed("expected `u v`", line_no);
    const VertexId u = to_vertex(a, one_indexed, line_no);
    const VertexId v = to_vertex(b, one_indexed, line_no);
    if (u == v) malformed("self-loop on vertex " + std::to_string(a), line_no);
    out.edges.emplace_back(u, v);
    out.vertex_count = std::max<std::size_t>(out.vertex_count, std::max(u, v) + std::size_t{1});
  }
  return out;
}

std::vector<Weight> parse_weight_list(std::istream& in) {
  std::vector<Weight> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long long w = 0;
    if (!(fields >> w)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      malformed("expected an integer weight", line_no);
    }
    out.push_back(w);
  }
  return out;
}

WeightedGraph load_graph(const ParsedGraph& source) {
  std::vector<Weight> weights;
  if (source.weights) {
    if (source.weights->size() != source.vertex_count) {
      throw Error(ErrorCode::MalformedInput,
                  "expected " + std::to_string(source.vertex_count) + " weights, got " +
                      std::to_string(source.weights->size()));
    }
    weights = *source.weights;
  } else {
    weights.assign(source.vertex_count, 1);
  }
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] <= 0) {
      throw Error(ErrorCode::ZeroWeight, "vertex " + std::to_string(v) + " has weight " +
                                             std::to_string(weights[v]));
    }
    if (weights[v] > kMaxInputWeight) {
      throw Error(ErrorCode::MalformedInput,
                  "vertex " + std::to_string(v) + " weight exceeds 2^20");
    }
  }
  return WeightedGraph::from_edges(std::move(weights), source.edges);
}

WeightedGraph read_graph_file(const std::filesystem::path& path, const LoadOptions& options) {
  const auto format = options.format ? options.format : format_from_extension(path);
  if (!format) {
    throw Error(ErrorCode::MalformedInput,
                "cannot infer graph format from '" + path.string() + "'; pass --format");
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());

  ParsedGraph parsed;
  switch (*format) {
    case GraphFormat::Metis: parsed = parse_metis(in); break;
    case GraphFormat::Dimacs: parsed = parse_dimacs(in); break;
    case GraphFormat::EdgeList: parsed = parse_edge_list(in, options.one_indexed); break;
  }

  if (options.weights) {
    if (auto spec = parse_weight_gen(*options.weights)) {
      parsed.weights = gen_weights(parsed.vertex_count, *spec);
    } else {
      std::ifstream win(*options.weights);
      if (!win) throw Error(ErrorCode::MalformedInput, "cannot open " + *options.weights);
      auto weights = parse_weight_list(win);
      // Edge lists infer n from the largest id; a longer weight file adds
      // trailing isolated vertices.
      if (*format == GraphFormat::EdgeList && weights.size() > parsed.vertex_count) {
        parsed.vertex_count = weights.size();
      }
      parsed.weights = std::move(weights);
    }
  }
  return load_graph(parsed);
}

VertexList write_metis(std::ostream& out, const WeightedGraph& g) {
  const VertexList order = g.alive_vertices();
  std::vector<VertexId> local(g.id_bound(), kNoVertex);
  for (VertexId i = 0; i < order.size(); ++i) local[order[i]] = i;
  out << order.size() << ' ' << g.edge_count() << " 10\n";
  for (VertexId v : order) {
    out << g.weight(v);
    for (VertexId u : g.neighbors(v)) out << ' ' << local[u] + 1;
    out << '\n';
  }
  return order;
}

void write_solution(std::ostream& out, std::span<const VertexId> solution) {
  VertexList sorted(solution.begin(), solution.end());
  std::sort(sorted.begin(), sorted.end());
  for (VertexId v : sorted) out << v << '\n';
}

VertexList read_solution(std::istream& in) {
  VertexList out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long long id = 0;
    if (!(fields >> id)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      malformed("expected a vertex id", line_no);
    }
    if (id < 0) {
      throw Error(ErrorCode::UnknownVertex, "negative vertex id on line " + std::to_string(line_no));
    }
    out.push_back(static_cast<VertexId>(id));
  }
  return out;
}

}  // namespace mwis
