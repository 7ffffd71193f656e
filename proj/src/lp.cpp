#include "planarize/lp.hpp"

#include <algorithm>
#include <optional>

namespace planarize {
namespace {

using Row = std::vector<Rational>;

Rational dot(const Row& a, const Row& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Gaussian elimination on a square system; nullopt if singular.
std::optional<Row> solve_square(std::vector<Row> a, Row b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Row x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Constraints in "a.x <= b" form, the box flagged.
struct Half {
  Row a;
  Rational b;
  bool box = false;
};

std::vector<Half> halves(const RationalLp& lp, const Rational& box) {
  std::vector<Half> out;
  for (const auto& c : lp.constraints) {
    Half h{c.coeffs, c.rhs, false};
    if (c.rel == Relation::Ge) {
      for (auto& v : h.a) v = -v;
      h.b = -h.b;
    }
    out.push_back(std::move(h));
  }
  const std::size_t n = lp.variables.size();
  for (std::size_t j = 0; j < n; ++j)
    for (int sign : {1, -1}) {
      Half h{Row(n, Rational(0)), box, true};
      h.a[j] = sign;
      out.push_back(std::move(h));
    }
  return out;
}

struct Vertex {
  Row x;
  bool on_box = false;
};

template <class Visit>
std::size_t enumerate_bases(const std::vector<Half>& hs, std::size_t n,
                            Visit&& visit) {
  const std::size_t k = hs.size();
  std::size_t examined = 0;
  if (n == 0 || k < n) return 0;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (;;) {
    ++examined;
    std::vector<Row> a;
    Row b;
    for (std::size_t i : idx) {
      a.push_back(hs[i].a);
      b.push_back(hs[i].b);
    }
    if (auto x = solve_square(std::move(a), std::move(b))) {
      bool feasible = true, on_box = false;
      for (const Half& h : hs) {
        const Rational lhs = dot(h.a, *x);
        if (lhs > h.b) {
          feasible = false;
          break;
        }
        if (h.box && lhs == h.b) on_box = true;
      }
      if (feasible) visit(Vertex{std::move(*x), on_box});
    }
    std::size_t p = n;
    while (p > 0 && idx[p - 1] == k - n + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }
  return examined;
}

struct Best {
  std::optional<Vertex> v;
  std::size_t examined = 0;
  std::size_t feasible = 0;
};

bool better(const Vertex& a, const Vertex& b, std::size_t obj) {
  if (a.x[obj] != b.x[obj]) return a.x[obj] > b.x[obj];
  if (a.on_box != b.on_box) return !a.on_box;
  return a.x < b.x;
}

Best optimise(const std::vector<Half>& hs, std::size_t n, std::size_t obj) {
  Best best;
  best.examined = enumerate_bases(hs, n, [&](Vertex v) {
    ++best.feasible;
    if (!best.v || better(v, *best.v, obj)) best.v = std::move(v);
  });
  return best;
}

Assignment to_assignment(const RationalLp& lp, const Row& x) {
  Assignment out;
  for (std::size_t j = 0; j < lp.variables.size(); ++j) out[lp.variables[j]] = x[j];
  return out;
}

const Rational kBox = Rational(1000000);

}  // namespace

RationalLp default_lp() {
  RationalLp lp;
  lp.variables = {"epsilon", "c3", "c4", "tau"};
  lp.objective = 0;
  auto add = [&](std::string name, Row coeffs, Relation rel, Rational rhs) {
    lp.constraints.push_back({std::move(name), std::move(coeffs), rel, rhs});
  };
  using R = Rational;
  add("delta2_ge_delta3", {R(0), R(2), R(-1), R(0)}, Relation::Le, R(1));
  add("delta3_ge_delta4", {R(0), R(1), R(-2), R(0)}, Relation::Ge, R(0));
  add("c4_nonneg", {R(0), R(0), R(1), R(0)}, Relation::Ge, R(0));
  add("tau_nonneg", {R(0), R(0), R(0), R(1)}, Relation::Ge, R(0));
  add("planar", {R(0), R(2), R(0), R(1)}, Relation::Le, R(3));
  add("three_regular", {R(1), R(4), R(0), R(0)}, Relation::Le, R(1));
  add("degree5", {R(1), R(0), R(-5), R(0)}, Relation::Le, R(0));
  add("mixed_a", {R(1), R(-2), R(4), R(0)}, Relation::Le, R(0));
  add("mixed_b", {R(1), R(4), R(1), R(1)}, Relation::Le, R(3));
  add("four_regular", {R(1), R(-4), R(5), R(-1)}, Relation::Le, R(-1));
  return lp;
}

Assignment reference_point() {
  return {{"epsilon", Rational(5, 23)},
          {"c3", Rational(9, 46)},
          {"c4", Rational(1, 23)},
          {"tau", Rational(15, 23)}};
}

RationalLp drop_constraint(const RationalLp& lp, const std::string& name) {
  RationalLp out = lp;
  auto it = std::find_if(out.constraints.begin(), out.constraints.end(),
                         [&](const LpConstraint& c) { return c.name == name; });
  if (it == out.constraints.end())
    throw InvalidSpec("no constraint named '" + name + "'");
  out.constraints.erase(it);
  return out;
}

std::vector<std::string> FeasibilityReport::tight() const {
  std::vector<std::string> out;
  for (const auto& s : slacks)
    if (s.slack == 0) out.push_back(s.name);
  return out;
}

FeasibilityReport check_feasible(const RationalLp& lp, const Assignment& x) {
  Row values;
  for (const auto& v : lp.variables) {
    auto it = x.find(v);
    if (it == x.end()) throw MissingVariable("no value for variable '" + v + "'");
    values.push_back(it->second);
  }
  FeasibilityReport report;
  for (const auto& c : lp.constraints) {
    const Rational lhs = dot(c.coeffs, values);
    const Rational slack = c.rel == Relation::Le ? c.rhs - lhs : lhs - c.rhs;
    report.slacks.push_back({c.name, slack});
    if (slack < 0) report.feasible = false;
  }
  return report;
}

LpSolution solve(const RationalLp& lp) {
  const std::size_t n = lp.variables.size();
  if (n == 0) throw InvalidSpec("LP without variables");

  // Recession direction with positive objective => unbounded (if feasible).
  RationalLp cone = lp;
  for (auto& c : cone.constraints) c.rhs = 0;
  const Best ray = optimise(halves(cone, Rational(1)), n, lp.objective);

  const Best best = optimise(halves(lp, kBox), n, lp.objective);
  if (!best.v) throw Infeasible("no feasible point");
  if (ray.v && ray.v->x[lp.objective] > 0)
    throw Unbounded("objective grows without bound");

  LpSolution out;
  out.optimum = best.v->x[lp.objective];
  out.assignment = to_assignment(lp, best.v->x);
  out.bases_examined = best.examined;
  out.feasible_bases = best.feasible;
  if (best.v->on_box) {
    // Bounded objective but the best point sits on the auxiliary box: the
    // value is still exact once doubling the box leaves it unchanged.
    const Best wider = optimise(halves(lp, kBox * 2), n, lp.objective);
    if (wider.v->x[lp.objective] != out.optimum)
      throw Unbounded("optimum depends on the auxiliary bound");
  }
  return out;
}

std::vector<Assignment> basic_feasible_solutions(const RationalLp& lp) {
  std::vector<Assignment> out;
  enumerate_bases(halves(lp, kBox), lp.variables.size(),
                  [&](Vertex v) { out.push_back(to_assignment(lp, v.x)); });
  return out;
}

}  // namespace planarize
