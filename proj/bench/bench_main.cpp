// Serial reference vs OpenMP kernels, plus the reducer scaling ladders.
//   planarize_bench [--quick]
#include <chrono>
#include <cstring>
#include <iostream>
#include <vector>

#include <omp.h>

#include "planarize/batch.hpp"
#include "planarize/bench.hpp"
#include "planarize/generators.hpp"
#include "planarize/oracle.hpp"

using namespace planarize;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const InducedMax& a, const InducedMax& b) {
  return a.size == b.size && a.witness == b.witness;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  bool agree = true;
  std::cout << "threads: " << omp_get_max_threads() << "\n\n";

  std::cout << "oracle max_induced (planar), serial vs parallel\n";
  for (std::size_t n : quick ? std::vector<std::size_t>{10, 12} : std::vector<std::size_t>{12, 14, 16}) {
    const MultiGraph g = random_gnp(n, 1, 2, 1000 + n);
    InducedMax s, p;
    const double ts = time_ms([&] { s = max_induced(g, PropertyId::Planar); });
    const double tp = time_ms([&] { p = max_induced_parallel(g, PropertyId::Planar); });
    agree = agree && same(s, p);
    std::cout << "  n=" << n << " m=" << g.num_edges() << " size=" << s.size
              << " serial_ms=" << ts << " parallel_ms=" << tp
              << " speedup=" << (tp > 0 ? ts / tp : 0) << (same(s, p) ? "" : "  MISMATCH") << "\n";
  }

  std::cout << "\nbatch oracle over 64 graphs (n=9, treewidth2)\n";
  {
    std::vector<MultiGraph> graphs;
    for (std::uint64_t seed = 0; seed < 64; ++seed) graphs.push_back(random_gnp(9, 1, 2, seed));
    std::vector<InducedMax> s, p;
    const double ts = time_ms([&] { s = batch_max_induced(graphs, PropertyId::Treewidth2, false); });
    const double tp = time_ms([&] { p = batch_max_induced(graphs, PropertyId::Treewidth2, true); });
    bool eq = s.size() == p.size();
    for (std::size_t i = 0; eq && i < s.size(); ++i) eq = same(s[i], p[i]);
    agree = agree && eq;
    std::cout << "  serial_ms=" << ts << " parallel_ms=" << tp << (eq ? "" : "  MISMATCH") << "\n";
  }

  std::cout << "\nbatch planar reductions over 256 random 4-regular graphs (n=200)\n";
  {
    std::vector<MultiGraph> graphs;
    for (std::uint64_t seed = 0; seed < 256; ++seed) graphs.push_back(random_regular(200, 4, seed));
    std::vector<BatchItem> s, p;
    const double ts = time_ms([&] { s = batch_reduce(Algorithm::Planar, graphs, false); });
    const double tp = time_ms([&] { p = batch_reduce(Algorithm::Planar, graphs, true); });
    bool eq = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      eq = eq && s[i].report && p[i].report && s[i].report->s == p[i].report->s;
    agree = agree && eq;
    std::cout << "  serial_ms=" << ts << " parallel_ms=" << tp << (eq ? "" : "  MISMATCH") << "\n";
  }

  const auto ladder = [&](Algorithm a, const char* family, std::vector<std::size_t> sizes) {
    std::cout << "\nladder " << to_string(a) << " on " << family << "\n";
    for (const auto& r : run_ladder(a, family, sizes, 7, quick ? 2 : 5))
      std::cout << "  size=" << r.size << " n=" << r.n << " m=" << r.m << " ms=" << r.ms
                << (r.ratio > 0 ? " ratio=" + std::to_string(r.ratio) : "") << "\n";
  };
  ladder(Algorithm::Pseudoforest, "k33xt", {1000, 2000, 4000});
  ladder(Algorithm::Treewidth2, "random-regular-4", {10000, 20000, 40000});
  if (!quick) ladder(Algorithm::Planar, "random-regular-4", {10000, 20000, 40000});

  std::cout << "\nserial and parallel results " << (agree ? "agree" : "DIFFER") << "\n";
  return agree ? 0 : 1;
}
