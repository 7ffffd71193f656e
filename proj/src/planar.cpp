#include "planarize/planar.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace planarize {
namespace {

struct Component {
  std::set<VertexId> members;
  std::size_t edges = 0;
  std::array<std::size_t, 6> count{};  // by degree, 5 meaning >= 5
  bool tau = false;                     // owes the graph-wide debt
  bool alive = true;
};

std::size_t bucket(std::uint32_t d) { return std::min<std::uint32_t>(d, 5); }

class PlanarRun {
 public:
  PlanarRun(const MultiGraph& input, const PlanarOptions& opts)
      : g_(input),
        ledger_(opts.params.value_or(ChargeParams::reference()), input.id_bound()),
        comp_of_(input.id_bound(), -1) {
    ledger_.strict = opts.strict_ledger;
    sol_.bound = kPlanarBound;
    sol_.n = g_.num_vertices();
    sol_.m = g_.num_edges();
  }

  PlanarResult run() {
    PLANARIZE_CHECK(g_.is_simple(), "input must be simple");
    harvest_input();
    for (const auto& comp : g_.components()) {
      const int id = new_component(comp);
      refresh_component(id);
    }
    for (VertexId v : g_.vertices()) {
      classify(v);
      refresh_parallel(v);
    }
    while (!g_.empty()) step();
    PLANARIZE_CHECK(ledger_.tau_outstanding == 0,
                    "graph debt outstanding after the last step");
    std::sort(sol_.s.begin(), sol_.s.end());
    if (!sol_.bound_holds())
      throw BoundViolation("planar bound violated: |S| = " +
                           std::to_string(sol_.s.size()));
    return {std::move(sol_), std::move(ledger_)};
  }

 private:
  void harvest_input() {
    TraceStep harvest;
    harvest.kind = StepKind::HarvestIsolated;
    for (VertexId v : g_.vertices())
      if (g_.degree(v) == 0) harvest.s_added.push_back(v);
    if (harvest.s_added.empty()) return;
    harvest.anchor = harvest.s_added.front();
    for (VertexId v : harvest.s_added) g_.delete_vertex(v);
    StepEvents ev;
    ev.kind = StepKind::HarvestIsolated;
    ev.leaving = harvest.s_added;
    ledger_step(ledger_, ev);
    sol_.s = harvest.s_added;
    sol_.trace.push_back(std::move(harvest));
  }

  int new_component(const std::vector<VertexId>& verts) {
    Component c;
    std::size_t twice = 0;
    for (VertexId v : verts) {
      c.members.insert(v);
      const auto d = g_.degree(v);
      ++c.count[bucket(d)];
      twice += d;
      comp_of_[v] = static_cast<int>(comps_.size());
    }
    c.edges = twice / 2;
    comps_.push_back(std::move(c));
    keys_.push_back(kNoKey);
    return static_cast<int>(comps_.size()) - 1;
  }

  static constexpr VertexId kNoKey = static_cast<VertexId>(-1);

  bool is_k4(const Component& c) const {
    if (c.members.size() != 4 || c.edges != 6 || c.count[3] != 4) return false;
    for (VertexId v : c.members)
      for (const Incidence& inc : g_.incidences(v))
        if (inc.mult != 1 || inc.to == v) return false;
    return true;
  }

  // Re-files a component under its current smallest member.
  void refresh_component(int id) {
    if (keys_[id] != kNoKey) {
      accept_.erase({keys_[id], id});
      cubic_.erase({keys_[id], id});
      quartic_.erase({keys_[id], id});
      keys_[id] = kNoKey;
    }
    const Component& c = comps_[id];
    if (!c.alive || c.members.empty()) return;
    const VertexId key = *c.members.begin();
    keys_[id] = key;
    const std::size_t size = c.members.size();
    if (is_k4(c) || (size == 2 && c.edges == 3)) accept_.insert({key, id});
    if (c.count[3] == size) cubic_.insert({key, id});
    if (c.count[4] == size) quartic_.insert({key, id});
  }

  void classify(VertexId v) {
    low_.erase(v);
    deg5_.erase(v);
    high_.erase(v);
    mixed_.erase(v);
    if (!g_.contains(v)) return;
    const auto d = g_.degree(v);
    if (d == 0) return;
    if (d <= 2) low_.insert(v);
    else if (d == 5) deg5_.insert(v);
    else if (d >= 6) high_.insert(v);
    else if (d == 4)
      for (VertexId w : g_.neighbors(v))
        if (g_.degree(w) == 3) {
          mixed_.insert(v);
          break;
        }
  }

  // Parallel pairs are stored in both orientations so that all pairs at a
  // vertex form one contiguous range.
  void refresh_parallel(VertexId v) {
    const auto lo = parallel_.lower_bound({v, 0});
    const auto hi = parallel_.lower_bound({v + 1, 0});
    std::vector<VertexId> partners;
    for (auto it = lo; it != hi; ++it) partners.push_back(it->v);
    parallel_.erase(lo, hi);
    for (VertexId w : partners) parallel_.erase({w, v});
    if (!g_.contains(v)) return;
    for (const Incidence& inc : g_.incidences(v))
      if (inc.to != v && inc.mult >= 2) {
        parallel_.insert({v, inc.to});
        parallel_.insert({inc.to, v});
      }
  }

  TraceStep plan() {
    TraceStep s;
    auto delete_one = [&](StepKind kind, VertexId v) {
      s.kind = kind;
      s.anchor = v;
      s.deleted = {v};
    };
    if (!high_.empty()) {
      delete_one(StepKind::Preprocess, *high_.begin());
    } else if (!low_.empty()) {
      const VertexId v = *low_.begin();
      const VertexId u = g_.neighbors(v).front();
      PLANARIZE_CHECK(g_.loops(v) == 0, "loop survived at a low-degree vertex");
      s.kind = StepKind::DegreeTwo;
      s.anchor = v;
      s.contracted = {{v, u}};
      // Contracting one copy of a double edge leaves a loop; drop it at once.
      if (g_.multiplicity(u, v) == 2) s.removed = {{u, u}};
      s.s_added = {v};
    } else if (!accept_.empty()) {
      const Component& c = comps_[accept_.begin()->second];
      s.kind = StepKind::PlanarAccept;
      s.anchor = *c.members.begin();
      for (VertexId v : c.members) {
        s.s_added.push_back(v);
        for (const Incidence& inc : g_.incidences(v))
          if (inc.to > v)
            for (std::uint32_t k = 0; k < inc.mult; ++k) s.removed.push_back({v, inc.to});
      }
    } else if (!parallel_.empty()) {
      const Edge e = *parallel_.begin();
      s.kind = StepKind::ParallelEdge;
      s.anchor = e.u;
      s.removed = {e};
    } else if (!cubic_.empty()) {
      const Component& c = comps_[cubic_.begin()->second];
      PLANARIZE_CHECK(c.members.size() >= 6,
                      "3-regular component below six vertices reached deletion");
      delete_one(StepKind::CubicComponent, *c.members.begin());
    } else if (!deg5_.empty()) {
      delete_one(StepKind::DegreeFive, *deg5_.begin());
    } else if (!mixed_.empty()) {
      delete_one(StepKind::MixedDegrees, *mixed_.begin());
    } else if (!quartic_.empty()) {
      delete_one(StepKind::QuarticComponent,
                 *comps_[quartic_.begin()->second].members.begin());
    } else {
      throw CaseAnalysisIncomplete("no planar reduction case applies");
    }
    return s;
  }

  void step() {
    TraceStep s = plan();

    // Everything whose adjacency the step changes.
    std::vector<VertexId> touched;
    for (VertexId v : s.deleted) {
      touched.push_back(v);
      for (VertexId w : g_.neighbors(v)) touched.push_back(w);
    }
    for (const Contraction& c : s.contracted) {
      touched.push_back(c.gone);
      for (VertexId w : g_.neighbors(c.gone)) touched.push_back(w);
    }
    for (const Edge& e : s.removed) {
      touched.push_back(e.u);
      touched.push_back(e.v);
    }
    for (VertexId v : s.s_added) touched.push_back(v);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    std::vector<std::uint32_t> before;
    for (VertexId v : touched) before.push_back(g_.degree(v));
    const int parent = comp_of_[touched.front()];
    Component& pc = comps_[parent];
    const bool owed = pc.tau;
    const std::size_t deg3_before = pc.count[3];

    execute_step(g_, s);
    for (VertexId v : touched)
      if (g_.contains(v) && g_.degree(v) == 0) {
        g_.delete_vertex(v);
        s.s_added.push_back(v);
      }

    StepEvents ev;
    ev.kind = s.kind;
    ev.edge_units = s.removed_edges;
    ev.deleted = s.deleted.size();
    ev.issue_debts = s.kind != StepKind::Preprocess;
    for (std::size_t i = 0; i < touched.size(); ++i) {
      const VertexId v = touched[i];
      if (!g_.contains(v)) {
        ev.leaving.push_back(v);
      } else if (g_.degree(v) < before[i]) {
        ev.drops.push_back({v, before[i], g_.degree(v)});
      }
    }

    // Component bookkeeping: only deletions can split a component.
    for (VertexId v : ev.leaving) pc.members.erase(v);
    std::vector<int> children;
    if (!s.deleted.empty() && !pc.members.empty()) {
      const std::vector<VertexId> rest(pc.members.begin(), pc.members.end());
      pc.alive = false;
      refresh_component(parent);
      std::vector<char> seen(g_.id_bound(), 0);
      for (VertexId start : rest) {
        if (seen[start]) continue;
        std::vector<VertexId> part{start};
        seen[start] = 1;
        for (std::size_t h = 0; h < part.size(); ++h)
          for (VertexId w : g_.neighbors(part[h]))
            if (!seen[w]) {
              seen[w] = 1;
              part.push_back(w);
            }
        children.push_back(new_component(part));
      }
    } else {
      for (std::size_t i = 0; i < touched.size(); ++i) {
        --pc.count[bucket(before[i])];
        if (g_.contains(touched[i])) ++pc.count[bucket(g_.degree(touched[i]))];
      }
      pc.edges -= s.removed_edges;
      if (pc.members.empty()) pc.alive = false;
      else children.push_back(parent);
    }

    // Graph debt: a component owes tau once degree-3 vertices appear in a
    // step; the debt follows every child that keeps degree-3 vertices.
    std::size_t owed_after = 0;
    for (int c : children) {
      Component& cc = comps_[c];
      cc.tau = ev.issue_debts && cc.count[3] > 0 && (owed || deg3_before == 0);
      owed_after += cc.tau;
    }
    if (owed_after > static_cast<std::size_t>(owed)) ev.tau_issued = owed_after - owed;
    if (owed && owed_after == 0) ev.tau_cleared = 1;

    ledger_step(ledger_, ev);
    for (VertexId v : touched)
      if (g_.contains(v))
        PLANARIZE_CHECK(ledger_.debt[v] <= ledger_.params.cap(g_.degree(v)),
                        "debt above the credit limit");

    refresh_component(parent);
    for (int c : children) refresh_component(c);
    std::vector<VertexId> dirty;
    for (VertexId v : touched) {
      dirty.push_back(v);
      if (g_.contains(v))
        for (VertexId w : g_.neighbors(v)) dirty.push_back(w);
    }
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (VertexId v : dirty) classify(v);
    for (VertexId v : touched) refresh_parallel(v);

    sol_.s.insert(sol_.s.end(), s.s_added.begin(), s.s_added.end());
    sol_.trace.push_back(std::move(s));
  }

  MultiGraph g_;
  LedgerState ledger_;
  ReductionSolution sol_;
  std::vector<int> comp_of_;
  std::vector<Component> comps_;
  std::vector<VertexId> keys_;
  std::set<VertexId> low_, deg5_, high_, mixed_;
  std::set<Edge> parallel_;
  std::set<std::pair<VertexId, int>> accept_, cubic_, quartic_;
};

}  // namespace

PlanarResult reduce_planar(const MultiGraph& g, const PlanarOptions& opts) {
  if (opts.params) validate_params(*opts.params);
  return PlanarRun(g, opts).run();
}

std::size_t preprocess_high_degree(MultiGraph& g) {
  std::set<VertexId> high;
  for (VertexId v : g.vertices())
    if (g.degree(v) >= 6) high.insert(v);
  std::size_t deleted = 0;
  while (!high.empty()) {
    const VertexId v = *high.begin();
    const auto nbrs = g.neighbors(v);
    g.delete_vertex(v);
    high.erase(v);
    ++deleted;
    for (VertexId w : nbrs)
      if (g.degree(w) < 6) high.erase(w);
  }
  return deleted;
}

}  // namespace planarize
