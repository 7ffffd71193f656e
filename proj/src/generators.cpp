#include "planarize/generators.hpp"

#include <algorithm>
#include <utility>

namespace planarize {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

FamilySpec FamilySpec::complete(std::size_t k) {
  FamilySpec s;
  s.kind = Kind::Complete;
  s.a = k;
  return s;
}
FamilySpec FamilySpec::complete_bipartite(std::size_t a, std::size_t b) {
  FamilySpec s;
  s.kind = Kind::CompleteBipartite;
  s.a = a;
  s.b = b;
  return s;
}
FamilySpec FamilySpec::cycle(std::size_t n) {
  FamilySpec s;
  s.kind = Kind::Cycle;
  s.a = n;
  return s;
}
FamilySpec FamilySpec::path(std::size_t n) {
  FamilySpec s;
  s.kind = Kind::Path;
  s.a = n;
  return s;
}
FamilySpec FamilySpec::disjoint_copies(FamilySpec inner, std::size_t t) {
  FamilySpec s;
  s.kind = Kind::DisjointCopies;
  s.a = t;
  s.inner = std::make_shared<const FamilySpec>(std::move(inner));
  return s;
}
FamilySpec FamilySpec::random_regular(std::size_t n, std::size_t d,
                                      std::uint64_t seed) {
  FamilySpec s;
  s.kind = Kind::RandomRegular;
  s.a = n;
  s.b = d;
  s.seed = seed;
  return s;
}
FamilySpec FamilySpec::fixture(std::string name) {
  FamilySpec s;
  s.kind = Kind::Fixture;
  s.name = std::move(name);
  return s;
}

namespace {

MultiGraph from_pairs(std::size_t n, const std::vector<Edge>& edges) {
  return MultiGraph::from_edge_list(edges, n);
}

// Cubic graph from LCF notation: Hamiltonian cycle plus chords i -> i + jump.
MultiGraph lcf(std::size_t n, std::initializer_list<int> pattern) {
  std::vector<Edge> edges;
  const std::vector<int> jumps(pattern);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    const long j = (static_cast<long>(i) + jumps[i % jumps.size()] +
                    static_cast<long>(n)) % static_cast<long>(n);
    const auto u = static_cast<VertexId>(std::min<long>(i, j));
    const auto v = static_cast<VertexId>(std::max<long>(i, j));
    edges.push_back({u, v});
  }
  return from_pairs(n, edges);
}

MultiGraph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < k; ++u)
    for (VertexId v = u + 1; v < k; ++v) edges.push_back({u, v});
  return from_pairs(k, edges);
}

MultiGraph bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v)
      edges.push_back({u, static_cast<VertexId>(a + v)});
  return from_pairs(a + b, edges);
}

MultiGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidSpec("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i)
    edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return from_pairs(n, edges);
}

MultiGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return from_pairs(n, edges);
}

MultiGraph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, 5 + (i + 2) % 5});
  }
  return from_pairs(10, edges);
}

MultiGraph fixture_graph(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "heawood") return lcf(14, {5, -5});
  if (name == "mcgee") return lcf(24, {12, 7, -7});
  if (name == "tutte-coxeter") return lcf(30, {-13, -9, 7, -7, 9, 13});
  if (name == "k33") return bipartite(3, 3);
  if (name == "k4") return complete_graph(4);
  if (name == "k5") return complete_graph(5);
  if (name == "c4") return cycle_graph(4);
  throw InvalidSpec("unknown fixture '" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"petersen", "heawood", "mcgee", "tutte-coxeter", "k33", "k4", "k5", "c4"};
}

MultiGraph disjoint_union(const MultiGraph& g, std::size_t copies) {
  const auto verts = g.vertices();
  const auto edges = g.edges();
  const std::size_t stride = g.id_bound();
  MultiGraph out(stride * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    const auto off = static_cast<VertexId>(c * stride);
    for (VertexId v = 0; v < stride; ++v)
      if (!g.contains(v)) out.delete_vertex(off + v);
    for (const Edge& e : edges) out.add_edge(off + e.u, off + e.v);
  }
  return out;
}

MultiGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0)
    throw InvalidSpec("random regular graph needs d < n and n*d even");
  SeededRng rng(seed);
  std::vector<VertexId> points(n * d);
  for (;;) {
    for (std::size_t i = 0; i < points.size(); ++i)
      points[i] = static_cast<VertexId>(i / d);
    for (std::size_t i = points.size(); i > 1; --i)
      std::swap(points[i - 1], points[rng.below(i)]);
    MultiGraph g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const VertexId u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v)) ok = false;
      else g.add_edge(u, v);
    }
    if (ok) return g;
  }
}

MultiGraph random_gnp(std::size_t n, std::uint64_t num, std::uint64_t den,
                      std::uint64_t seed) {
  if (den == 0 || num > den) throw InvalidSpec("edge probability outside [0,1]");
  SeededRng rng(seed);
  MultiGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.below(den) < num) g.add_edge(u, v);
  return g;
}

MultiGraph subdivide(const MultiGraph& g, std::size_t extra) {
  MultiGraph out(g.id_bound());
  for (VertexId v = 0; v < g.id_bound(); ++v)
    if (!g.contains(v)) out.delete_vertex(v);
  for (const Edge& e : g.edges()) {
    VertexId prev = e.u;
    for (std::size_t i = 0; i < extra; ++i) {
      const VertexId mid = out.add_vertex();
      out.add_edge(prev, mid);
      prev = mid;
    }
    out.add_edge(prev, e.v);
  }
  return out;
}

MultiGraph generate(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Complete:
      return complete_graph(spec.a);
    case Kind::CompleteBipartite:
      return bipartite(spec.a, spec.b);
    case Kind::Cycle:
      return cycle_graph(spec.a);
    case Kind::Path:
      return path_graph(spec.a);
    case Kind::DisjointCopies:
      if (!spec.inner) throw InvalidSpec("disjoint copies without an inner spec");
      return disjoint_union(generate(*spec.inner), spec.a);
    case Kind::RandomRegular:
      return random_regular(spec.a, spec.b, spec.seed);
    case Kind::Fixture:
      return fixture_graph(spec.name);
  }
  throw InvalidSpec("unknown family");
}

}  // namespace planarize
