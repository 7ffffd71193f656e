#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "planarize/bench.hpp"
#include "planarize/certify.hpp"
#include "planarize/generators.hpp"
#include "planarize/io.hpp"
#include "planarize/ledger.hpp"
#include "planarize/lp.hpp"
#include "planarize/minors.hpp"
#include "planarize/oracle.hpp"
#include "planarize/report.hpp"

using nlohmann::json;
using namespace planarize;

namespace {

// Exit codes: 0 success, 1 bad input or usage, 2 a checked guarantee failed.
constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kAssertion = 2;

struct Common {
  std::string input;
  std::string output;
  bool json_out = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

MultiGraph read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_graph(std::cin);
  return load_graph(path);
}

json rational_map(const Assignment& a) {
  json j = json::object();
  for (const auto& [k, v] : a) j[k] = format_rational(v);
  return j;
}

json slack_report(const FeasibilityReport& r) {
  json slacks = json::object();
  for (const auto& s : r.slacks) slacks[s.name] = format_rational(s.slack);
  return {{"feasible", r.feasible}, {"slacks", slacks}, {"tight", r.tight()}};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw ParseError("bad size '" + item + "'");
      out.push_back(v);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large induced pseudoforests, partial 2-trees and planar subgraphs"};
  app.require_subcommand(1);
  app.fallthrough();  // parent options may follow the subcommand
  Common c;
  app.add_flag("--json", c.json_out, "JSON on stdout for commands that emit graphs");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run a reduction and certify its output");
  std::string alg = "pseudoforest", params_text;
  bool with_trace = false, with_ledger = false;
  reduce->add_option("-i", c.input, "graph file (edge list or DIMACS)")->required();
  reduce->add_option("-o", c.output, "write S, one id per line");
  reduce->add_option("--alg", alg, "pseudoforest | tw2 | planar");
  reduce->add_option("--params", params_text, "planar charge parameters e,c3,c4,tau");
  reduce->add_flag("--trace", with_trace, "include the step trace");
  reduce->add_flag("--ledger", with_ledger, "include every ledger entry (planar)");

  // certify
  auto* certify = app.add_subcommand("certify", "check properties of G[S]");
  std::string set_path;
  certify->add_option("-i", c.input, "graph file")->required();
  certify->add_option("-s,--set", set_path, "vertex set file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact maximum induced subgraph");
  std::string property = "planar";
  bool parallel = false;
  oracle->add_option("-i", c.input, "graph file")->required();
  oracle->add_option("-p,--property", property,
                     "independent-set | matching | linear-forest | forest | "
                     "pseudoforest | treewidth2 | outerplanar | planar");
  oracle->add_flag("--parallel", parallel, "split the enumeration across threads");

  // lp
  auto* lp = app.add_subcommand("lp", "the credit-scheme linear program");
  lp->require_subcommand(1);
  auto* lp_check = lp->add_subcommand("check", "slack of every constraint");
  std::string values_text;
  lp_check->add_option("--values", values_text, "e,c3,c4,tau (default: reference point)");
  auto* lp_solve = lp->add_subcommand("solve", "exact optimum");
  std::vector<std::string> drops;
  lp_solve->add_option("--drop", drops, "constraint name to remove");

  // minor
  auto* minor = app.add_subcommand("minor", "level contraction of a high-girth graph");
  std::optional<VertexId> root;
  minor->add_option("-i", c.input, "graph file")->required();
  minor->add_option("-o", c.output, "write the minor as an edge list");
  minor->add_option("--root", root, "root of the breadth-first tree");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a test graph");
  gen->require_subcommand(1);
  gen->add_option("-o", c.output, "output file (default stdout)");
  std::size_t t = 1, n = 0, d = 0, k = 0;
  std::uint64_t seed = 0;
  std::string fixture;
  auto* gen_k33 = gen->add_subcommand("k33xt", "disjoint copies of K3,3");
  gen_k33->add_option("--t", t)->required();
  auto* gen_k5 = gen->add_subcommand("k5xt", "disjoint copies of K5");
  gen_k5->add_option("--t", t)->required();
  auto* gen_rr = gen->add_subcommand("random-regular", "seeded random regular graph");
  gen_rr->add_option("--n", n)->required();
  gen_rr->add_option("--d", d)->required();
  gen_rr->add_option("--seed", seed);
  auto* gen_complete = gen->add_subcommand("complete", "complete graph");
  gen_complete->add_option("--k", k)->required();
  auto* gen_cycle = gen->add_subcommand("cycle", "cycle");
  gen_cycle->add_option("--n", n)->required();
  auto* gen_fixture = gen->add_subcommand("fixture", "named fixture");
  gen_fixture->add_option("name", fixture, "petersen | heawood | mcgee | tutte-coxeter | k33 | k4 | k5 | c4")
      ->required();

  // bench
  auto* bench = app.add_subcommand("bench", "time a reducer on a doubling ladder");
  std::string family = "k33xt", sizes_text = "1000,2000,4000";
  int repeats = 5;
  bench->add_option("--alg", alg, "pseudoforest | tw2 | planar");
  bench->add_option("--family", family, "k33xt | random-regular-<d>");
  bench->add_option("--sizes", sizes_text, "comma-separated family sizes");
  bench->add_option("--seed", seed);
  bench->add_option("--repeats", repeats, "runs per size; the best is kept");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*reduce) {
      const Algorithm a = parse_algorithm(alg);
      std::optional<ChargeParams> params;
      if (!params_text.empty()) {
        if (a != Algorithm::Planar) throw InvalidSpec("--params applies to planar only");
        params = parse_params(params_text);
      }
      const MultiGraph g = read_input(c.input);
      const AlgorithmRun run = run_algorithm(a, g, params);
      const RunReport report = build_report(a, g, run);
      json j = to_json(report, with_ledger);
      if (with_trace) j["trace"] = to_json(run.solution.trace);
      emit(j);
      if (!c.output.empty()) {
        std::string text;
        for (VertexId v : report.s) text += std::to_string(v) + "\n";
        write_text(c.output, text);
      }
      return report.ok() ? kOk : kAssertion;
    }

    if (*certify) {
      const MultiGraph g = read_input(c.input);
      const auto s = load_vertex_set(set_path);
      const MultiGraph h = induced_subgraph(g, s);
      json comps = json::array();
      for (const auto& comp : h.components()) {
        const auto cls = classify_component(restrict_to(h, comp));
        json e{{"min_vertex", comp.front()}, {"size", comp.size()}, {"class", to_string(cls.kind)}};
        if (!cls.reason.empty()) e["reason"] = cls.reason;
        comps.push_back(e);
      }
      emit({{"n", h.num_vertices()},
            {"m", h.num_edges()},
            {"pseudoforest", is_pseudoforest(h)},
            {"partial_2_tree", is_partial_2_tree(h)},
            {"planar", is_planar(h)},
            {"reduces_to_k4_or_empty", reduces_to_k4_or_empty(h)},
            {"subdivides_k4_or_d3", all_components_subdivide_k4_or_d3(h)},
            {"components", comps}});
      return kOk;
    }

    if (*oracle) {
      const PropertyId p = parse_property(property);
      const MultiGraph g = read_input(c.input);
      const InducedMax r = parallel ? max_induced_parallel(g, p) : max_induced(g, p);
      emit({{"property", to_string(p)}, {"n", g.num_vertices()}, {"m", g.num_edges()},
            {"size", r.size}, {"witness", r.witness}});
      return kOk;
    }

    if (*lp_check) {
      Assignment x = reference_point();
      if (!values_text.empty()) {
        const ChargeParams p = parse_params(values_text);
        x = {{"epsilon", p.epsilon}, {"c3", p.c3}, {"c4", p.c4}, {"tau", p.tau}};
      }
      json j = slack_report(check_feasible(default_lp(), x));
      j["assignment"] = rational_map(x);
      emit(j);
      return kOk;
    }

    if (*lp_solve) {
      RationalLp model = default_lp();
      for (const auto& name : drops) model = drop_constraint(model, name);
      const LpSolution sol = solve(model);
      emit({{"optimum", format_rational(sol.optimum)},
            {"assignment", rational_map(sol.assignment)},
            {"dropped", drops},
            {"bases_examined", sol.bases_examined},
            {"feasible_bases", sol.feasible_bases}});
      return kOk;
    }

    if (*minor) {
      const MultiGraph g = read_input(c.input);
      const MinorResult r = level_contract(g, root);
      const DensityReport dr = verify_minor_density(r);
      if (!c.output.empty()) write_text(c.output, format_graph(r.minor));
      if (c.json_out || !c.output.empty()) {
        emit({{"n", r.n}, {"m", r.m}, {"girth", r.girth}, {"ell", r.ell},
              {"offset_a", r.offset_a}, {"root", r.root}, {"kept", r.kept},
              {"n_prime", r.n_prime}, {"m_prime", r.m_prime},
              {"surplus", dr.surplus}, {"surplus_ratio", format_rational(dr.surplus_ratio)},
              {"within_level_bound", dr.within_level_bound},
              {"within_girth_bound", dr.within_girth_bound}});
      } else {
        std::cout << format_graph(r.minor);
      }
      return dr.within_level_bound ? kOk : kAssertion;
    }

    if (*gen) {
      MultiGraph g;
      if (*gen_k33) g = generate(FamilySpec::disjoint_copies(FamilySpec::complete_bipartite(3, 3), t));
      else if (*gen_k5) g = generate(FamilySpec::disjoint_copies(FamilySpec::complete(5), t));
      else if (*gen_rr) g = generate(FamilySpec::random_regular(n, d, seed));
      else if (*gen_complete) g = generate(FamilySpec::complete(k));
      else if (*gen_cycle) g = generate(FamilySpec::cycle(n));
      else g = generate(FamilySpec::fixture(fixture));
      if (c.json_out) {
        if (!c.output.empty()) write_text(c.output, format_graph(g));
        emit({{"n", g.num_vertices()}, {"m", g.num_edges()},
              {"edges", [&] {
                 json e = json::array();
                 for (const Edge& x : g.edges()) e.push_back({x.u, x.v});
                 return e;
               }()}});
      } else {
        write_text(c.output, format_graph(g));
      }
      return kOk;
    }

    if (*bench) {
      const auto rows = run_ladder(parse_algorithm(alg), family, parse_sizes(sizes_text), seed, repeats);
      json table = json::array();
      for (const auto& r : rows)
        table.push_back({{"size", r.size}, {"n", r.n}, {"m", r.m}, {"ms", r.ms}, {"ratio", r.ratio}});
      emit({{"algorithm", alg}, {"family", family}, {"rows", table}});
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kAssertion;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
