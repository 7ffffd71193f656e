#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "planarize/graph.hpp"

namespace planarize {

// Reads a simple graph. Two dialects are auto-detected:
//   plain:  optional "p <n> <m>" header, then "u v" pairs, 0-based labels
//   DIMACS: "p edge <n> <m>" header and "e u v" lines, 1-based labels
// '#' starts a comment in either dialect; DIMACS "c" lines are comments too.
MultiGraph read_graph(std::istream& in);
MultiGraph parse_graph(std::string_view text);
MultiGraph load_graph(const std::string& path);

// Writes the plain dialect: "p n m" then sorted "u v" lines with u < v.
// Vertex ids are compacted to 0..n-1 in increasing order of the live ids.
void write_graph(std::ostream& out, const MultiGraph& g);
std::string format_graph(const MultiGraph& g);
void save_graph(const std::string& path, const MultiGraph& g);

// One vertex id per line, '#' comments allowed.
std::vector<VertexId> read_vertex_set(std::istream& in);
std::vector<VertexId> load_vertex_set(const std::string& path);

}  // namespace planarize
