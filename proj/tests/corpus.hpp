#pragma once

// Seeded graph corpora shared by the unit and acceptance tests, plus a few
// test-side checks that deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "planarize/generators.hpp"
#include "planarize/graph.hpp"

namespace corpus {

using planarize::MultiGraph;

// Mix of random regular graphs (n <= 60, d <= 5) and dense small graphs.
inline std::vector<MultiGraph> bound_corpus(std::size_t count) {
  std::vector<MultiGraph> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    planarize::SeededRng rng(seed * 7919 + 13);
    if (seed % 3 != 2) {
      const std::size_t d = 1 + rng.below(5);
      std::size_t n = d + 2 + rng.below(60 - d - 1);
      if ((n * d) % 2) --n;
      out.push_back(planarize::random_regular(n, d, seed));
    } else {
      const std::size_t n = 5 + rng.below(10);
      static constexpr std::uint64_t kNum[] = {1, 3, 9};
      static constexpr std::uint64_t kDen[] = {2, 4, 10};
      const std::size_t k = rng.below(3);
      out.push_back(planarize::random_gnp(n, kNum[k], kDen[k], seed));
    }
  }
  return out;
}

// Random graphs on at most 9 vertices for oracle comparisons.
inline std::vector<MultiGraph> small_corpus(std::size_t count) {
  std::vector<MultiGraph> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    planarize::SeededRng rng(seed * 104729 + 7);
    const std::size_t n = 3 + rng.below(7);
    const std::uint64_t num = 1 + rng.below(9);
    out.push_back(planarize::random_gnp(n, num, 10, seed + 5000));
  }
  return out;
}

// Shortest cycle through brute force: for every edge, the shortest path
// between its endpoints avoiding that edge. Simple graphs only.
inline std::optional<std::size_t> girth_by_edges(const MultiGraph& g) {
  std::optional<std::size_t> best;
  const auto edges = g.edges();
  for (const auto& e : edges) {
    std::vector<std::size_t> dist(g.id_bound(), std::numeric_limits<std::size_t>::max());
    std::deque<planarize::VertexId> q{e.u};
    dist[e.u] = 0;
    while (!q.empty()) {
      const auto x = q.front();
      q.pop_front();
      for (auto y : g.neighbors(x)) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        if (dist[y] != std::numeric_limits<std::size_t>::max()) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    if (dist[e.v] != std::numeric_limits<std::size_t>::max()) {
      const std::size_t len = dist[e.v] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// K_{2,3}: two non-adjacent degree-3 vertices, three degree-2 vertices each
// adjacent to both.
inline bool is_k23(const MultiGraph& h) {
  if (h.num_vertices() != 5 || h.num_edges() != 6 || !h.is_simple()) return false;
  std::vector<planarize::VertexId> hubs, spokes;
  for (auto v : h.vertices()) (h.degree(v) == 3 ? hubs : spokes).push_back(v);
  if (hubs.size() != 2 || spokes.size() != 3) return false;
  if (h.adjacent(hubs[0], hubs[1])) return false;
  return std::all_of(spokes.begin(), spokes.end(), [&](auto s) {
    return h.degree(s) == 2 && h.adjacent(s, hubs[0]) && h.adjacent(s, hubs[1]);
  });
}

// Connected graphs of girth >= 11 on at most 60 vertices: random cubic graphs
// on 8-10 vertices with girth >= 4, every edge subdivided twice. Random cubic
// graphs of girth 11 cannot be that small (the smallest has 112 vertices).
inline std::vector<MultiGraph> high_girth_corpus(std::size_t count) {
  std::vector<MultiGraph> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    const std::size_t n = 8 + 2 * (seed % 2);
    const auto base = planarize::random_regular(n, 3, seed);
    if (base.components().size() != 1) continue;
    const auto g0 = girth_by_edges(base);
    if (!g0 || *g0 < 4) continue;
    auto g = planarize::subdivide(base, 2);
    const auto gg = girth_by_edges(g);
    if (gg && *gg >= 11 && g.num_vertices() <= 60) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace corpus
