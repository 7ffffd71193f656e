#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "planarize/graph.hpp"

namespace planarize::detail {

// Ordered pool of (priority, vertex) candidates; at most one entry per vertex.
// Lower priority fires first, ties go to the smaller id.
class CaseQueue {
 public:
  static constexpr int kNone = -1;

  explicit CaseQueue(std::size_t id_bound) : key_(id_bound, kNone) {}

  void set(VertexId v, int priority) {
    if (key_[v] == priority) return;
    if (key_[v] != kNone) pool_.erase({key_[v], v});
    key_[v] = priority;
    if (priority != kNone) pool_.insert({priority, v});
  }
  void clear(VertexId v) { set(v, kNone); }
  int key(VertexId v) const { return key_[v]; }

  std::optional<std::pair<int, VertexId>> top() const {
    if (pool_.empty()) return std::nullopt;
    return *pool_.begin();
  }
  bool empty() const { return pool_.empty(); }

 private:
  std::vector<int> key_;
  std::set<std::pair<int, VertexId>> pool_;
};

}  // namespace planarize::detail
