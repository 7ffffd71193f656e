#include "planarize/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include <omp.h>

namespace planarize {
namespace {

using Mask = std::uint32_t;

// Simple graph on at most 31 vertices with bitmask rows.
struct Small {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<VertexId> ids;  // local index -> graph id
};

Small to_small(const MultiGraph& g, std::size_t cap, const char* what) {
  Small s;
  s.ids = g.vertices();
  if (s.ids.size() > cap)
    throw TooLarge(std::string(what) + ": " + std::to_string(s.ids.size()) +
                   " vertices exceeds the cap of " + std::to_string(cap));
  if (!g.is_simple())
    throw InvalidSpec(std::string(what) + " expects a simple graph");
  s.n = static_cast<int>(s.ids.size());
  s.adj.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i)
    for (VertexId w : g.neighbors(s.ids[i])) {
      const int j = static_cast<int>(
          std::lower_bound(s.ids.begin(), s.ids.end(), w) - s.ids.begin());
      s.adj[i] |= Mask{1} << j;
    }
  return s;
}

// Re-indexes the vertices of `sub` to 0..k-1.
Small restrict(const Small& g, Mask sub) {
  Small s;
  std::vector<int> local(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (sub >> v & 1) {
      local[v] = s.n++;
      s.ids.push_back(g.ids[v]);
    }
  s.adj.assign(s.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (local[v] < 0) continue;
    for (Mask row = g.adj[v] & sub; row; row &= row - 1)
      s.adj[local[v]] |= Mask{1} << local[std::countr_zero(row)];
  }
  return s;
}

Mask full(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

int edge_count(const Small& g) {
  int twice = 0;
  for (Mask row : g.adj) twice += std::popcount(row);
  return twice / 2;
}

bool acyclic(const Small& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < g.n; ++u)
    for (Mask row = g.adj[u] >> (u + 1); row; row &= row - 1) {
      const int v = u + 1 + std::countr_zero(row);
      const int a = root(u), b = root(v);
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

// Prune leaves until none remain; what is left must be disjoint cycles.
bool unicyclic_components(const Small& g) {
  Mask alive = full(g.n);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n; ++v)
      if ((alive >> v & 1) && std::popcount(g.adj[v] & alive) <= 1) {
        alive &= ~(Mask{1} << v);
        changed = true;
      }
  }
  for (int v = 0; v < g.n; ++v)
    if ((alive >> v & 1) && std::popcount(g.adj[v] & alive) != 2) return false;
  return true;
}

// Treewidth via TW(S) = min_v max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
// are the vertices outside S + v reachable from v through S. Values above
// `limit` are clamped to limit + 1 to keep the table small.
int treewidth_dp(const Small& g, int limit) {
  if (g.n == 0) return 0;
  const Mask all = full(g.n);
  std::vector<std::int8_t> tw(std::size_t{1} << g.n, 0);
  tw[0] = -1;
  const int cap = std::min(limit + 1, 127);
  for (Mask s = 1; s <= all && s != 0; ++s) {
    int best = cap;
    for (Mask rest = s; rest && best > -1; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask before = s & ~(Mask{1} << v);
      int value = tw[before];
      if (value >= best) continue;
      Mask reach = Mask{1} << v;
      for (;;) {
        Mask nb = 0;
        for (Mask r = reach; r; r &= r - 1) nb |= g.adj[std::countr_zero(r)];
        const Mask grow = nb & before & ~reach;
        if (!grow) {
          const int q = std::popcount(nb & ~before & ~reach & all);
          value = std::max(value, q);
          break;
        }
        reach |= grow;
      }
      best = std::min(best, value);
    }
    tw[s] = static_cast<std::int8_t>(best);
    if (s == all) break;
  }
  return std::max<int>(tw[all], 0);
}

struct Route {
  const Small& g;
  Mask blocked;  // branch vertices and used internals
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> paths;
  std::vector<int> path;

  bool route(std::size_t i) {
    if (i == pairs.size()) return true;
    path.assign(1, pairs[i].first);
    return extend(pairs[i].first, i);
  }

  bool extend(int x, std::size_t i) {
    const int b = pairs[i].second;
    if (g.adj[x] >> b & 1) {
      // A direct step to b dominates every longer continuation from x.
      path.push_back(b);
      paths[i] = path;
      const auto saved = path;
      if (route(i + 1)) return true;
      path = saved;
      path.pop_back();
      return false;
    }
    for (Mask row = g.adj[x] & ~blocked; row; row &= row - 1) {
      const int y = std::countr_zero(row);
      blocked |= Mask{1} << y;
      path.push_back(y);
      const auto saved = path;
      if (extend(y, i)) return true;
      path = saved;
      path.pop_back();
      blocked &= ~(Mask{1} << y);
    }
    return false;
  }
};

std::optional<KuratowskiWitness> search(const Small& g) {
  // Degree <= 1 vertices lie on no subdivision.
  Mask alive = full(g.n);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n; ++v)
      if ((alive >> v & 1) && std::popcount(g.adj[v] & alive) <= 1) {
        alive &= ~(Mask{1} << v);
        changed = true;
      }
  }
  if (std::popcount(alive) < 5) return std::nullopt;
  const Small h = restrict(g, alive);

  auto emit = [&](KuratowskiWitness::Kind kind, const std::vector<int>& branch,
                  const Route& r) {
    KuratowskiWitness w;
    w.kind = kind;
    for (int b : branch) w.branch.push_back(h.ids[b]);
    for (const auto& p : r.paths) {
      std::vector<VertexId> q;
      for (int x : p) q.push_back(h.ids[x]);
      w.paths.push_back(std::move(q));
    }
    return w;
  };

  std::vector<int> deg4, deg3;
  for (int v = 0; v < h.n; ++v) {
    const int d = std::popcount(h.adj[v]);
    if (d >= 3) deg3.push_back(v);
    if (d >= 4) deg4.push_back(v);
  }

  // K5: every 5-subset of degree >= 4 vertices, all ten pairs routed.
  const int k4 = static_cast<int>(deg4.size());
  if (k4 >= 5) {
    std::vector<int> idx{0, 1, 2, 3, 4};
    for (;;) {
      std::vector<int> branch;
      Mask bm = 0;
      for (int i : idx) {
        branch.push_back(deg4[i]);
        bm |= Mask{1} << deg4[i];
      }
      Route r{h, bm, {}, {}, {}};
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) r.pairs.push_back({branch[i], branch[j]});
      r.paths.resize(r.pairs.size());
      if (r.route(0)) return emit(KuratowskiWitness::Kind::K5, branch, r);
      int p = 4;
      while (p >= 0 && idx[p] == k4 - 5 + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < 5; ++q) idx[q] = idx[q - 1] + 1;
    }
  }

  // K3,3: every 6-subset of degree >= 3 vertices, every bipartition with
  // the first chosen vertex on the left.
  const int k3 = static_cast<int>(deg3.size());
  if (k3 >= 6) {
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
      std::vector<int> six;
      Mask bm = 0;
      for (int i : idx) {
        six.push_back(deg3[i]);
        bm |= Mask{1} << deg3[i];
      }
      for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          std::vector<int> left{six[0], six[a], six[b]}, right;
          for (int i = 1; i < 6; ++i)
            if (i != a && i != b) right.push_back(six[i]);
          Route r{h, bm, {}, {}, {}};
          for (int x : left)
            for (int y : right) r.pairs.push_back({x, y});
          r.paths.resize(r.pairs.size());
          if (r.route(0)) {
            std::vector<int> branch = left;
            branch.insert(branch.end(), right.begin(), right.end());
            return emit(KuratowskiWitness::Kind::K33, branch, r);
          }
        }
      int p = 5;
      while (p >= 0 && idx[p] == k3 - 6 + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < 6; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return std::nullopt;
}

bool planar_small(const Small& g) {
  const int m = edge_count(g);
  if (g.n >= 3 && m > 3 * g.n - 6) return false;
  return !search(g).has_value();
}

bool holds(const Small& g, PropertyId p) {
  switch (p) {
    case PropertyId::IndependentSet:
      return edge_count(g) == 0;
    case PropertyId::Matching:
      for (Mask row : g.adj)
        if (std::popcount(row) > 1) return false;
      return true;
    case PropertyId::LinearForest:
      for (Mask row : g.adj)
        if (std::popcount(row) > 2) return false;
      return acyclic(g);
    case PropertyId::Forest:
      return acyclic(g);
    case PropertyId::Pseudoforest:
      return unicyclic_components(g);
    case PropertyId::Treewidth2:
      return treewidth_dp(g, 2) <= 2;
    case PropertyId::Planar:
      return planar_small(g);
    case PropertyId::Outerplanar: {
      Small apex = g;
      apex.n = g.n + 1;
      apex.adj.push_back(full(g.n));
      for (int v = 0; v < g.n; ++v) apex.adj[v] |= Mask{1} << g.n;
      apex.ids.push_back(0);
      return planar_small(apex);
    }
  }
  return false;
}

// Subsets of size k of an n-set, as masks, in lexicographic order of their
// sorted element lists.
std::vector<Mask> combinations(int n, int k) {
  std::vector<Mask> out;
  if (k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

InducedMax result_of(const Small& g, Mask m) {
  InducedMax r;
  for (int v = 0; v < g.n; ++v)
    if (m >> v & 1) r.witness.push_back(g.ids[v]);
  r.size = r.witness.size();
  return r;
}

}  // namespace

std::string to_string(PropertyId p) {
  switch (p) {
    case PropertyId::IndependentSet: return "independent-set";
    case PropertyId::Matching: return "matching";
    case PropertyId::LinearForest: return "linear-forest";
    case PropertyId::Forest: return "forest";
    case PropertyId::Pseudoforest: return "pseudoforest";
    case PropertyId::Treewidth2: return "treewidth2";
    case PropertyId::Outerplanar: return "outerplanar";
    case PropertyId::Planar: return "planar";
  }
  return "?";
}

PropertyId parse_property(const std::string& name) {
  for (PropertyId p :
       {PropertyId::IndependentSet, PropertyId::Matching, PropertyId::LinearForest,
        PropertyId::Forest, PropertyId::Pseudoforest, PropertyId::Treewidth2,
        PropertyId::Outerplanar, PropertyId::Planar})
    if (to_string(p) == name) return p;
  throw InvalidSpec("unknown property '" + name + "'");
}

std::size_t oracle_cap() {
  if (const char* env = std::getenv("PLANARIZE_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<unsigned long>(v, 30);
  }
  return 16;
}

bool oracle_has_property(const MultiGraph& g, PropertyId p) {
  return holds(to_small(g, 30, "oracle"), p);
}

InducedMax max_induced(const MultiGraph& g, PropertyId p) {
  const Small s = to_small(g, oracle_cap(), "max_induced");
  for (int k = s.n; k >= 0; --k)
    for (Mask m : combinations(s.n, k))
      if (holds(restrict(s, m), p)) return result_of(s, m);
  return {};
}

InducedMax max_induced_parallel(const MultiGraph& g, PropertyId p) {
  const Small s = to_small(g, oracle_cap(), "max_induced");
  constexpr std::ptrdiff_t kBlock = 512;
  for (int k = s.n; k >= 0; --k) {
    const std::vector<Mask> subsets = combinations(s.n, k);
    const auto total = static_cast<std::ptrdiff_t>(subsets.size());
    for (std::ptrdiff_t lo = 0; lo < total; lo += kBlock) {
      const std::ptrdiff_t hi = std::min(total, lo + kBlock);
      std::ptrdiff_t first = hi;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first)
      for (std::ptrdiff_t i = lo; i < hi; ++i)
        if (i < first && holds(restrict(s, subsets[i]), p)) first = i;
      if (first < hi) return result_of(s, subsets[first]);
    }
  }
  return {};
}

int exact_treewidth(const MultiGraph& g, std::size_t cap) {
  const Small s = to_small(g, std::min<std::size_t>(cap, 24), "exact_treewidth");
  return treewidth_dp(s, 126);
}

std::optional<KuratowskiWitness> find_kuratowski(const MultiGraph& g,
                                                 std::size_t cap) {
  return search(to_small(g, std::min<std::size_t>(cap, 30), "find_kuratowski"));
}

bool check_kuratowski(const MultiGraph& g, const KuratowskiWitness& w) {
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  const std::size_t nb = k5 ? 5 : 6;
  if (w.branch.size() != nb || w.paths.size() != (k5 ? 10u : 9u)) return false;
  std::vector<std::pair<VertexId, VertexId>> want;
  if (k5) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        want.push_back({w.branch[i], w.branch[j]});
  } else {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j)
        want.push_back({w.branch[i], w.branch[j]});
  }
  std::vector<VertexId> seen(w.branch.begin(), w.branch.end());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& p = w.paths[i];
    if (p.size() < 2) return false;
    auto ends = std::minmax(p.front(), p.back());
    if (ends != std::minmax(want[i].first, want[i].second)) return false;
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (!g.contains(p[k]) || !g.contains(p[k + 1]) || !g.adjacent(p[k], p[k + 1]))
        return false;
    seen.insert(seen.end(), p.begin() + 1, p.end() - 1);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace planarize
