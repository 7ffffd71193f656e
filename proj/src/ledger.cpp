#include "planarize/ledger.hpp"

#include "planarize/lp.hpp"

namespace planarize {

ChargeParams ChargeParams::reference() {
  ChargeParams p;
  p.epsilon = Rational(5, 23);
  p.c3 = Rational(9, 46);
  p.c4 = Rational(1, 23);
  p.tau = Rational(15, 23);
  return p;
}

Rational ChargeParams::cap(std::uint32_t degree) const {
  switch (degree) {
    case 0: return Rational(0);
    case 1: return c2 / 2;
    case 2: return c2;
    case 3: return c3;
    case 4: return c4;
    default: return Rational(0);
  }
}

void validate_params(const ChargeParams& p) {
  if (p.c2 != 1) throw InfeasibleParams("c2 must equal 1");
  const auto report = check_feasible(
      default_lp(), {{"epsilon", p.epsilon}, {"c3", p.c3}, {"c4", p.c4}, {"tau", p.tau}});
  if (report.feasible) return;
  std::string bad;
  for (const auto& s : report.slacks)
    if (s.slack < 0) bad += (bad.empty() ? "" : ", ") + s.name;
  throw InfeasibleParams("parameters violate " + bad);
}

ChargeParams parse_params(std::string_view text) {
  const auto values = parse_rational_list(text);
  if (values.size() != 4)
    throw ParseError("expected four values: epsilon,c3,c4,tau");
  ChargeParams p;
  p.epsilon = values[0];
  p.c3 = values[1];
  p.c4 = values[2];
  p.tau = values[3];
  return p;
}

LedgerState::LedgerState(ChargeParams p, std::size_t id_bound)
    : params(std::move(p)), debt(id_bound, Rational(0)) {}

Rational ledger_step(LedgerState& ledger, const StepEvents& ev) {
  const ChargeParams& p = ledger.params;
  Rational charge = Rational(static_cast<long long>(ev.edge_units)) -
                    (5 + p.epsilon) * static_cast<long long>(ev.deleted);
  for (VertexId v : ev.leaving) {
    charge -= ledger.debt[v];
    ledger.debt[v] = 0;
  }
  for (const DegreeDrop& d : ev.drops) {
    if (d.to >= d.from) continue;
    const Rational cap = p.cap(d.to);
    if (ledger.debt[d.v] > cap) {
      // Only a drop to degree 1 lowers the limit; the excess is paid now.
      charge -= ledger.debt[d.v] - cap;
      ledger.debt[d.v] = cap;
    } else if (ev.issue_debts && d.to >= 2 && d.to <= 4) {
      charge += cap - ledger.debt[d.v];
      ledger.debt[d.v] = cap;
    }
  }
  charge += p.tau * static_cast<long long>(ev.tau_issued);
  charge -= p.tau * static_cast<long long>(ev.tau_cleared);
  ledger.tau_outstanding += ev.tau_issued;
  PLANARIZE_CHECK(ledger.tau_outstanding >= ev.tau_cleared,
                  "clearing a graph debt that was never issued");
  ledger.tau_outstanding -= ev.tau_cleared;

  ledger.entries.push_back({ledger.entries.size(), ev.kind, charge});
  if (charge < 0) {
    ++ledger.negative_steps;
    if (ledger.strict)
      throw NegativeCharge("step " + std::to_string(ledger.entries.size() - 1) +
                           " (" + to_string(ev.kind) + ") has charge " +
                           format_rational(charge));
  }
  return charge;
}

}  // namespace planarize
