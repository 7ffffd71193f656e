#include "planarize/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace planarize {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
      value > std::numeric_limits<VertexId>::max() - 1)
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n_hint = 0;
  std::optional<std::size_t> declared_m;
  bool dimacs = false;
  bool plain_pairs = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    auto tok = tokens(view);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() == 4) {
        dimacs = true;
        n_hint = number(tok[2], line_no);
        declared_m = number(tok[3], line_no);
      } else if (tok.size() == 3) {
        n_hint = number(tok[1], line_no);
        declared_m = number(tok[2], line_no);
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed header");
      }
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3)
        throw ParseError("line " + std::to_string(line_no) +
                         ": malformed edge line");
      dimacs = true;
      const auto u = number(tok[1], line_no);
      const auto v = number(tok[2], line_no);
      if (u == 0 || v == 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": DIMACS labels are 1-based");
      edges.push_back({static_cast<VertexId>(u - 1),
                       static_cast<VertexId>(v - 1)});
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a 'u v' pair");
    plain_pairs = true;
    edges.push_back({static_cast<VertexId>(number(tok[0], line_no)),
                     static_cast<VertexId>(number(tok[1], line_no))});
  }
  if (dimacs && plain_pairs)
    throw ParseError("mixed DIMACS and plain edge lines");
  if (declared_m && *declared_m != edges.size())
    throw ParseError("header declares " + std::to_string(*declared_m) +
                     " edges, file has " + std::to_string(edges.size()));
  for (const Edge& e : edges)
    if (n_hint != 0 && std::max(e.u, e.v) >= n_hint)
      throw ParseError("edge label exceeds the declared vertex count");
  return MultiGraph::from_edge_list(edges, n_hint);
}

MultiGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

MultiGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  const auto verts = g.vertices();
  std::unordered_map<VertexId, VertexId> compact;
  for (std::size_t i = 0; i < verts.size(); ++i)
    compact[verts[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = compact.at(e.u);
    VertexId b = compact.at(e.v);
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  std::sort(edges.begin(), edges.end());
  out << "p " << verts.size() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const MultiGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void save_graph(const std::string& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_graph(out, g);
}

std::vector<VertexId> read_vertex_set(std::istream& in) {
  std::vector<VertexId> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    for (auto tok : tokens(view))
      out.push_back(static_cast<VertexId>(number(tok, line_no)));
  }
  return out;
}

std::vector<VertexId> load_vertex_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_vertex_set(in);
}

}  // namespace planarize
