#include "planarize/minors.hpp"

#include <algorithm>
#include <deque>

namespace planarize {

MinorResult level_contract(const MultiGraph& g, std::optional<VertexId> root) {
  if (g.empty()) throw Disconnected("empty graph");
  if (g.components().size() != 1) throw Disconnected("input is not connected");
  PLANARIZE_CHECK(g.is_simple(), "input must be simple");
  const auto gg = girth(g);
  if (!gg) throw InsufficientGirth("acyclic input has no finite girth");
  if (*gg < 7)
    throw InsufficientGirth("girth " + std::to_string(*gg) +
                            " is below 7, so the level stride would be 0");

  MinorResult r;
  r.girth = *gg;
  r.ell = (r.girth - 3) / 4;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.root = root.value_or(g.vertices().front());
  if (!g.contains(r.root)) throw UnknownVertex("root not in graph");

  const std::size_t bound = g.id_bound();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  r.level.assign(bound, kUnseen);
  r.parent.assign(bound, r.root);
  std::vector<VertexId> order{r.root};
  r.level[r.root] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (VertexId w : g.neighbors(v))
      if (r.level[w] == kUnseen) {
        r.level[w] = r.level[v] + 1;
        r.parent[w] = v;
        order.push_back(w);
      }
  }

  std::vector<std::size_t> per_class(r.ell, 0);
  for (VertexId v : order)
    if (v != r.root) ++per_class[r.level[v] % r.ell];
  r.offset_a = static_cast<std::size_t>(
      std::min_element(per_class.begin(), per_class.end()) - per_class.begin());

  auto kept = [&](VertexId v) {
    return v == r.root ||
           (r.level[v] >= r.offset_a && r.level[v] % r.ell == r.offset_a);
  };
  for (VertexId v : order)
    if (kept(v)) r.kept.push_back(v);
  std::sort(r.kept.begin(), r.kept.end());

  // Deepest first, so each vertex has absorbed its contracted subtree before
  // it is merged into its own parent.
  r.minor = g;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (!kept(*it)) r.minor.contract_edge(*it, r.parent[*it], r.parent[*it]);

  r.representative.assign(bound, 0);
  for (VertexId v : order)
    r.representative[v] = kept(v) ? v : r.representative[r.parent[v]];

  r.n_prime = r.minor.num_vertices();
  r.m_prime = r.minor.num_edges();
  PLANARIZE_CHECK(r.minor.is_simple(), "contracted minor is not simple");
  PLANARIZE_CHECK(r.m_prime + r.n == r.m + r.n_prime,
                  "edge count identity m' = m - n + n' fails");
  return r;
}

DensityReport verify_minor_density(const MinorResult& r) {
  DensityReport d;
  d.n_prime = r.n_prime;
  d.m_prime = r.m_prime;
  d.surplus = static_cast<long long>(r.m_prime) - static_cast<long long>(r.n_prime);
  d.surplus_ratio = Rational(d.surplus) * r.girth / r.n;
  d.within_level_bound = r.n_prime <= (r.n + r.ell - 1) / r.ell + 1;
  d.within_girth_bound = r.n_prime <= (5 * r.n + r.girth - 1) / r.girth + 1;
  return d;
}

}  // namespace planarize
