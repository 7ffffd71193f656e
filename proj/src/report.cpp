#include "planarize/report.hpp"

#include <algorithm>
#include <chrono>

#include "planarize/certify.hpp"
#include "planarize/planar.hpp"
#include "planarize/pseudoforest.hpp"
#include "planarize/treewidth2.hpp"

namespace planarize {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Pseudoforest: return "pseudoforest";
    case Algorithm::Treewidth2: return "tw2";
    case Algorithm::Planar: return "planar";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::Pseudoforest, Algorithm::Treewidth2, Algorithm::Planar})
    if (to_string(a) == name) return a;
  throw InvalidSpec("unknown algorithm '" + name + "'");
}

BoundRatio bound_ratio(Algorithm a) {
  switch (a) {
    case Algorithm::Pseudoforest: return kPseudoforestBound;
    case Algorithm::Treewidth2: return kTreewidth2Bound;
    case Algorithm::Planar: return kPlanarBound;
  }
  return kPseudoforestBound;
}

AlgorithmRun run_algorithm(Algorithm a, const MultiGraph& g,
                           const std::optional<ChargeParams>& params) {
  AlgorithmRun run;
  const auto t0 = std::chrono::steady_clock::now();
  switch (a) {
    case Algorithm::Pseudoforest: run.solution = reduce_pseudoforest(g); break;
    case Algorithm::Treewidth2: run.solution = reduce_treewidth2(g); break;
    case Algorithm::Planar: {
      PlanarResult r = reduce_planar(g, {params, true});
      run.solution = std::move(r.solution);
      run.ledger = std::move(r.ledger);
      break;
    }
  }
  run.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return run;
}

std::vector<CertificateVerdict> certify_solution(Algorithm a, const MultiGraph& input,
                                                 const std::vector<VertexId>& s) {
  const MultiGraph h = induced_subgraph(input, s);
  switch (a) {
    case Algorithm::Pseudoforest:
      return {{"pseudoforest", is_pseudoforest(h), true}};
    case Algorithm::Treewidth2:
      return {{"partial_2_tree", is_partial_2_tree(h), true}};
    case Algorithm::Planar:
      return {{"planar", is_planar(h), true},
              {"reduces_to_k4_or_empty", reduces_to_k4_or_empty(h), true},
              {"subdivides_k4_or_d3", all_components_subdivide_k4_or_d3(h), false}};
  }
  return {};
}

bool RunReport::ok() const {
  if (!bound_satisfied) return false;
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const CertificateVerdict& c) { return c.passed || !c.required; });
}

RunReport build_report(Algorithm a, const MultiGraph& input, const AlgorithmRun& run) {
  RunReport r;
  r.algorithm = a;
  r.n = input.num_vertices();
  r.m = input.num_edges();
  r.s = run.solution.s;
  std::sort(r.s.begin(), r.s.end());
  const BoundRatio ratio = bound_ratio(a);
  r.bound_value = Rational(static_cast<long long>(r.n)) -
                  Rational(ratio.num, ratio.den) * static_cast<long long>(r.m);
  r.bound_satisfied = bound_holds(ratio, r.n, r.m, r.s.size());
  r.certificates = certify_solution(a, input, r.s);
  if (run.ledger) {
    LedgerSummary sum;
    sum.steps = run.ledger->entries.size();
    sum.negative_steps = run.ledger->negative_steps;
    for (const LedgerEntry& e : run.ledger->entries) {
      if (e.step == 0 || e.charge < sum.min_charge) sum.min_charge = e.charge;
      sum.total_charge += e.charge;
    }
    sum.entries = run.ledger->entries;
    r.ledger = std::move(sum);
  }
  r.wall_ms = run.wall_ms;
  return r;
}

nlohmann::json to_json(const RunReport& r, bool with_ledger_entries) {
  nlohmann::json j;
  j["algorithm"] = to_string(r.algorithm);
  j["n"] = r.n;
  j["m"] = r.m;
  j["s_size"] = r.s.size();
  j["s"] = r.s;
  j["bound_value"] = format_rational(r.bound_value);
  j["bound_satisfied"] = r.bound_satisfied;
  nlohmann::json certs = nlohmann::json::object();
  for (const auto& c : r.certificates) certs[c.name] = c.passed;
  j["certificates"] = certs;
  if (r.ledger) {
    nlohmann::json l;
    l["steps"] = r.ledger->steps;
    l["negative_steps"] = r.ledger->negative_steps;
    l["min_charge"] = format_rational(r.ledger->min_charge);
    l["total_charge"] = format_rational(r.ledger->total_charge);
    if (with_ledger_entries) {
      l["entries"] = nlohmann::json::array();
      for (const auto& e : r.ledger->entries)
        l["entries"].push_back({{"step", e.step},
                                {"case", to_string(e.kind)},
                                {"charge", format_rational(e.charge)}});
    }
    j["ledger"] = l;
  }
  j["wall_ms"] = r.wall_ms;
  j["ok"] = r.ok();
  return j;
}

nlohmann::json to_json(const std::vector<TraceStep>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const TraceStep& s : trace) {
    nlohmann::json j;
    j["case"] = to_string(s.kind);
    j["anchor"] = s.anchor;
    j["deleted"] = s.deleted;
    nlohmann::json c = nlohmann::json::array();
    for (const Contraction& k : s.contracted) c.push_back({k.gone, k.survivor});
    j["contracted"] = c;
    nlohmann::json rm = nlohmann::json::array();
    for (const Edge& e : s.removed) rm.push_back({e.u, e.v});
    j["removed"] = rm;
    j["simplify_after"] = s.simplify_after;
    j["s_added"] = s.s_added;
    j["removed_edges"] = s.removed_edges;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace planarize
