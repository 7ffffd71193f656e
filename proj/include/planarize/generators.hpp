#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planarize/graph.hpp"

namespace planarize {

// Portable seeded stream: mt19937_64 words with rejection-sampled bounded
// draws, so sequences do not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

 private:
  std::mt19937_64 engine_;
};

struct FamilySpec {
  enum class Kind {
    Complete,           // a = k
    CompleteBipartite,  // a, b
    Cycle,              // a = n
    Path,               // a = n
    DisjointCopies,     // inner, a = t
    RandomRegular,      // a = n, b = d, seed
    Fixture,            // name
  };
  Kind kind = Kind::Complete;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::shared_ptr<const FamilySpec> inner;

  static FamilySpec complete(std::size_t k);
  static FamilySpec complete_bipartite(std::size_t a, std::size_t b);
  static FamilySpec cycle(std::size_t n);
  static FamilySpec path(std::size_t n);
  static FamilySpec disjoint_copies(FamilySpec inner, std::size_t t);
  static FamilySpec random_regular(std::size_t n, std::size_t d, std::uint64_t seed);
  static FamilySpec fixture(std::string name);
};

// Throws InvalidSpec for impossible parameters or unknown fixture names.
MultiGraph generate(const FamilySpec& spec);

std::vector<std::string> fixture_names();  // petersen, heawood, mcgee, ...

MultiGraph disjoint_union(const MultiGraph& g, std::size_t copies);

// Simple d-regular graph from the pairing model, rejecting loops and
// parallels and retrying from the same seed stream.
MultiGraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Random simple graph with each pair present independently with
// probability num/den.
MultiGraph random_gnp(std::size_t n, std::uint64_t num, std::uint64_t den,
                      std::uint64_t seed);

// Replaces every edge by a path with `extra` interior vertices.
MultiGraph subdivide(const MultiGraph& g, std::size_t extra);

}  // namespace planarize
