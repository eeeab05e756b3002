#include "nlgames/analysis.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "nlgames/equilibrium.hpp"
#include "nlgames/lp.hpp"

namespace nlgames {

PayoffPair expected_payoff(const Game& game, const Behavior& behavior, const Prior& prior) {
  require_same_scenario(game.scenario, behavior.scenario, "expected_payoff");
  require_prior_shape(prior, game.scenario, "expected_payoff");
  const Scenario& sc = game.scenario;
  PayoffPair out;
  for (int x = 0; x < sc.num_x(); ++x)
    for (int y = 0; y < sc.num_y(); ++y)
      for (int a = 0; a < sc.actions_a(x); ++a)
        for (int b = 0; b < sc.actions_b(y); ++b) {
          QuadExt weighted = prior.at(x, y) * behavior.at(x, y, a, b);
          out.value_a += weighted * game.payoff(Player::alice, x, y, a, b);
          out.value_b += weighted * game.payoff(Player::bob, x, y, a, b);
        }
  return out;
}

BoundResult local_bound(const Game& game, const Prior& prior, Player selector, ExecMode mode) {
  require_prior_shape(prior, game.scenario, "local_bound");
  const Scenario& sc = game.scenario;
  auto strategies = enumerate_local_strategies(sc);
  std::vector<QuadExt> values(strategies.size());
  parallel_for(static_cast<long>(strategies.size()), mode, [&](long i) {
    const LocalStrategy& st = strategies[i];
    QuadExt v(0);
    for (int x = 0; x < sc.num_x(); ++x)
      for (int y = 0; y < sc.num_y(); ++y)
        v += prior.at(x, y) * game.payoff(selector, x, y, st.alice_map[x], st.bob_map[y]);
    values[i] = std::move(v);
  });
  size_t best = 0;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;  // first maximizer wins
  BoundResult out;
  out.value = values[best];
  out.strategy = strategies[best];
  out.witness = deterministic_behavior(sc, strategies[best].alice_map, strategies[best].bob_map);
  out.attained_at_vertex = true;  // deterministic behaviors are NS vertices
  return out;
}

BoundResult ns_bound(const Game& game, const Prior& prior, Player selector) {
  require_prior_shape(prior, game.scenario, "ns_bound");
  const Scenario& sc = game.scenario;
  const int n = sc.coords();
  NsConstraintSystem sys = ns_constraints(sc);

  LinearProgram<QuadExt> lp;
  lp.num_vars = n;
  lp.objective.resize(n);
  for (int i = 0; i < n; ++i) {
    auto [x, y, a, b] = sc.decode(i);
    lp.objective[i] = prior.at(x, y) * game.payoff(selector, x, y, a, b);
  }
  lp.lower.assign(n, std::optional<QuadExt>(QuadExt(0)));
  lp.upper.assign(n, std::optional<QuadExt>());
  lp.eq.reserve(sys.eq.size());
  for (size_t r = 0; r < sys.eq.size(); ++r) {
    LinearConstraint<QuadExt> row;
    row.coeffs.reserve(n);
    for (const Rational& v : sys.eq[r]) row.coeffs.emplace_back(v);
    row.rhs = QuadExt(sys.rhs[r]);
    lp.eq.push_back(std::move(row));
  }
  LpOutcome<QuadExt> sol = solve(lp);
  if (sol.status != LpStatus::optimal)
    throw std::logic_error("ns_bound: the no-signaling polytope LP must have an optimum");

  BoundResult out;
  out.value = sol.value;
  out.witness = Behavior{sc, std::move(sol.point)};
  out.attained_at_vertex = is_vertex(out.witness);
  return out;
}

ClassifyResult classify_behavior(const Behavior& behavior, const QuadExt& tolerance) {
  if (static_cast<int>(behavior.p.size()) != behavior.scenario.coords())
    throw std::invalid_argument("classify_behavior: behavior table has wrong length");
  ValidationReport report = validate_behavior(behavior, tolerance);
  if (!report.nonneg_normalized) {
    std::string msg = "classify_behavior: behavior is not a probability table";
    if (!report.issues.empty()) msg += ": " + report.issues.front().describe();
    throw std::invalid_argument(msg);
  }
  if (!report.alice_no_signaling || !report.bob_no_signaling)
    return {BehaviorClass::signaling, {}};
  LocalityCertificate cert = is_local(behavior, tolerance);
  if (cert.local) return {BehaviorClass::local, std::move(cert)};
  return {BehaviorClass::nonlocal_ns, {}};
}

GapReport gap_report(const Game& game, const Prior& prior,
                     const std::vector<NamedBehavior>& behaviors, const QuadExt& tolerance) {
  require_prior_shape(prior, game.scenario, "gap_report");
  GapReport out;
  auto verdicts = [&](const Behavior& behavior, const QuadExt& tol) {
    bool ep = check_ex_post(game, behavior, tol).pass;
    bool ea = check_ex_ante(game, behavior, prior, tol).pass;
    return std::pair<bool, bool>(ep, ea);
  };

  BoundResult lb = local_bound(game, prior);
  auto [lb_ep, lb_ea] = verdicts(lb.witness, QuadExt(0));
  out.rows.push_back({"local", lb.value, lb_ep, lb_ea});

  for (const NamedBehavior& named : behaviors) {
    require_same_scenario(game.scenario, named.behavior.scenario, "gap_report");
    QuadExt payoff = expected_payoff(game, named.behavior, prior).value_a;
    auto [ep, ea] = verdicts(named.behavior, tolerance);
    out.rows.push_back({named.name, std::move(payoff), ep, ea});
  }

  BoundResult nb = ns_bound(game, prior);
  auto [nb_ep, nb_ea] = verdicts(nb.witness, QuadExt(0));
  out.rows.push_back({"no-signaling", nb.value, nb_ep, nb_ea});
  return out;
}

std::string render_gap_report(const GapReport& report, bool rescale4, int approx_digits) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"name", "payoff", "ex post", "ex ante"});
  for (const GapRow& row : report.rows) {
    QuadExt payoff = rescale4 ? row.payoff * QuadExt(4) : row.payoff;
    std::string shown = render_scalar(payoff);
    if (approx_digits > 0) shown += " (" + approx_decimal(payoff, approx_digits) + ")";
    cells.push_back({row.name, shown, row.ex_post ? "pass" : "fail", row.ex_ante ? "pass" : "fail"});
  }
  std::array<size_t, 4> width{};
  for (const auto& row : cells)
    for (int c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (int c = 0; c < 4; ++c) {
      os << row[c];
      if (c < 3) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nlgames
