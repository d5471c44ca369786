#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwis/graph.hpp"

namespace mwis {

enum class GraphFormat { Metis, Dimacs, EdgeList };

std::optional<GraphFormat> parse_format_name(const std::string& name);
// .graph/.metis -> METIS, .dimacs/.clq/.col/.wclq -> DIMACS, .edges/.txt/.el -> edge list.
std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path);

// Parsed form of a graph description, before validation. Ids are 0-based.
struct ParsedGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<Weight>> weights;
};

// METIS: header `n m [fmt]`, then one line per vertex listing 1-based
// neighbors, prefixed by the vertex weight when fmt is 10. `%` starts a comment.
ParsedGraph parse_metis(std::istream& in);

// DIMACS-like: `p edge n m`, `v <id> <weight>`, `e <u> <v>`; `c` comments.
ParsedGraph parse_dimacs(std::istream& in);

// One `u v` pair per line. n is one past the largest id seen.
ParsedGraph parse_edge_list(std::istream& in, bool one_indexed);

// One integer per line.
std::vector<Weight> parse_weight_list(std::istream& in);

// Validates and builds the graph. Missing weights default to 1; weights above
// kMaxInputWeight are rejected as MalformedInput.
WeightedGraph load_graph(const ParsedGraph& source);

struct LoadOptions {
  std::optional<GraphFormat> format;
  bool one_indexed = false;             // edge lists only
  std::optional<std::string> weights;   // path or gen:uniform:LO:HI:SEED
};

WeightedGraph read_graph_file(const std::filesystem::path& path, const LoadOptions& options);

// Writes the alive part of g in METIS fmt=10, renumbering vertices 1..k in
// ascending id order. Returns the original id of every written vertex.
VertexList write_metis(std::ostream& out, const WeightedGraph& g);

// One vertex id per line, sorted ascending.
void write_solution(std::ostream& out, std::span<const VertexId> solution);
VertexList read_solution(std::istream& in);

}  // namespace mwis
