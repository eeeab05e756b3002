#include "nlgames/synthesis.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/equilibrium.hpp"
#include "nlgames/lp.hpp"
#include "nlgames/polytope.hpp"

namespace nlgames {
namespace {

Prior uniform_weights(const Scenario& sc) {
  Prior prior{sc.num_x(), sc.num_y(), {}};
  QuadExt w = QuadExt(1) / QuadExt(static_cast<long>(sc.num_x()) * sc.num_y());
  prior.w.assign(static_cast<size_t>(sc.num_x()) * sc.num_y(), w);
  return prior;
}

QuadExt strategy_payoff(const Scenario& sc, const std::vector<QuadExt>& payoff, const Prior& prior,
                        const LocalStrategy& st) {
  QuadExt v(0);
  for (int x = 0; x < sc.num_x(); ++x)
    for (int y = 0; y < sc.num_y(); ++y)
      v += prior.at(x, y) * payoff[sc.index(x, y, st.alice_map[x], st.bob_map[y])];
  return v;
}

// Correlated-equilibrium rows of the block (x, y) at the vertex's block
// distribution, written as <= 0 rows over the payoff variables.
void append_ce_rows(const Scenario& sc, const Behavior& vertex, int x, int y,
                    std::vector<LinearConstraint<QuadExt>>& rows, int num_vars) {
  const int na = sc.actions_a(x), nb = sc.actions_b(y);
  for (int a = 0; a < na; ++a)
    for (int a2 = 0; a2 < na; ++a2) {
      if (a2 == a) continue;
      LinearConstraint<QuadExt> row;
      row.coeffs.assign(num_vars, QuadExt(0));
      for (int b = 0; b < nb; ++b) {
        const QuadExt& q = vertex.at(x, y, a, b);
        row.coeffs[sc.index(x, y, a, b)] -= q;
        row.coeffs[sc.index(x, y, a2, b)] += q;
      }
      rows.push_back(std::move(row));
    }
  for (int b = 0; b < nb; ++b)
    for (int b2 = 0; b2 < nb; ++b2) {
      if (b2 == b) continue;
      LinearConstraint<QuadExt> row;
      row.coeffs.assign(num_vars, QuadExt(0));
      for (int a = 0; a < na; ++a) {
        const QuadExt& q = vertex.at(x, y, a, b);
        row.coeffs[sc.index(x, y, a, b)] -= q;
        row.coeffs[sc.index(x, y, a, b2)] += q;
      }
      rows.push_back(std::move(row));
    }
}

}  // namespace

SynthesisResult synthesize_game(const Behavior& vertex, const SynthesisOptions& options) {
  if (options.payoff_box.sign() <= 0)
    throw std::invalid_argument("synthesize_game: payoff box must be positive");
  const Scenario& sc = vertex.scenario;
  Prior prior = options.prior ? *options.prior : uniform_weights(sc);
  require_prior_shape(prior, sc, "synthesize_game");

  SynthesisResult out;
  if (!is_vertex(vertex)) {  // throws if outside the polytope
    out.status = SynthesisStatus::rejected_not_vertex;
    out.detail = "behavior is not an extreme point of the no-signaling polytope";
    return out;
  }
  if (classify_behavior(vertex).cls == BehaviorClass::local) {
    out.status = SynthesisStatus::rejected_local;
    out.detail = "behavior is local; every payoff gives deterministic strategies the same optimum";
    return out;
  }

  const int n = sc.coords();
  const int eps = n;  // variable layout: payoffs 0..n-1, epsilon last
  LinearProgram<QuadExt> lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, QuadExt(0));
  lp.objective[eps] = QuadExt(1);
  lp.lower.assign(n + 1, std::optional<QuadExt>(-options.payoff_box));
  lp.upper.assign(n + 1, std::optional<QuadExt>(options.payoff_box));
  lp.lower[eps] = options.minimum_gap ? std::optional<QuadExt>(*options.minimum_gap)
                                      : std::optional<QuadExt>();
  lp.upper[eps] = std::optional<QuadExt>();

  for (int x = 0; x < sc.num_x(); ++x)
    for (int y = 0; y < sc.num_y(); ++y) append_ce_rows(sc, vertex, x, y, lp.le, lp.num_vars);

  // epsilon + sum w * u * (P_D - P_vertex) <= 0 for every deterministic D
  for (const LocalStrategy& st : enumerate_local_strategies(sc)) {
    LinearConstraint<QuadExt> row;
    row.coeffs.assign(lp.num_vars, QuadExt(0));
    row.coeffs[eps] = QuadExt(1);
    for (int i = 0; i < n; ++i) {
      auto [x, y, a, b] = sc.decode(i);
      QuadExt det = (st.alice_map[x] == a && st.bob_map[y] == b) ? QuadExt(1) : QuadExt(0);
      row.coeffs[i] = prior.at(x, y) * (det - vertex.p[i]);
    }
    lp.le.push_back(std::move(row));
  }

  if (options.require_ns_optimum) {
    EnumerationOptions enum_opts;
    enum_opts.max_coords = options.max_coords;
    enum_opts.mode = options.mode;
    for (const Behavior& other : enumerate_ns_vertices(sc, enum_opts).vertices) {
      LinearConstraint<QuadExt> row;
      row.coeffs.assign(lp.num_vars, QuadExt(0));
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        auto [x, y, a, b] = sc.decode(i);
        row.coeffs[i] = prior.at(x, y) * (other.p[i] - vertex.p[i]);
        zero = zero && row.coeffs[i] == QuadExt(0);
      }
      if (!zero) lp.le.push_back(std::move(row));
    }
  }

  LpOutcome<QuadExt> sol = solve(lp);
  if (sol.status == LpStatus::infeasible) {
    out.status = SynthesisStatus::lp_infeasible;
    out.detail = "constraint system infeasible (phase-one residual " +
                 render_scalar(sol.infeasibility) + ")";
    return out;
  }
  if (sol.status != LpStatus::optimal)
    throw std::logic_error("synthesize_game: gap LP cannot be unbounded under a payoff box");

  out.gap = sol.value;
  out.game.scenario = sc;
  out.game.payoff_a.assign(sol.point.begin(), sol.point.begin() + n);
  out.game.payoff_b.clear();
  if (out.gap.sign() > 0) {
    out.status = SynthesisStatus::ok;
    out.detail = "gap " + render_scalar(out.gap);
  } else {
    out.status = SynthesisStatus::nonpositive_gap;
    out.detail = "best achievable gap " + render_scalar(out.gap) + " is not positive";
  }
  return out;
}

ConstraintAudit check_synthesis_constraints(const Game& game, const Behavior& vertex,
                                            const Prior& prior) {
  require_same_scenario(game.scenario, vertex.scenario, "check_synthesis_constraints");
  require_prior_shape(prior, game.scenario, "check_synthesis_constraints");
  const Scenario& sc = game.scenario;

  QuadExt vertex_payoff = expected_payoff(game, vertex, prior).value_a;
  ConstraintAudit audit;
  bool first = true;
  for (const LocalStrategy& st : enumerate_local_strategies(sc)) {
    QuadExt sep = vertex_payoff - strategy_payoff(sc, game.payoff_a, prior, st);
    if (first || sep < audit.min_separation) audit.min_separation = std::move(sep);
    first = false;
  }

  first = true;
  for (int x = 0; x < sc.num_x(); ++x)
    for (int y = 0; y < sc.num_y(); ++y) {
      EquilibriumReport block = check_correlated_eq(block_game(game, x, y),
                                                    block_distribution(vertex, x, y));
      for (const DeviationMargin& m : block.margins) {
        if (first || m.margin < audit.min_ce_margin) audit.min_ce_margin = m.margin;
        first = false;
      }
    }

  for (const QuadExt& u : game.payoff_a)
    if (u.abs() > audit.max_abs_payoff) audit.max_abs_payoff = u.abs();
  if (!game.common())
    for (const QuadExt& u : game.payoff_b)
      if (u.abs() > audit.max_abs_payoff) audit.max_abs_payoff = u.abs();
  return audit;
}

SynthesisVerification verify_synthesis(const Game& game, const Behavior& vertex,
                                       const Prior& prior) {
  require_same_scenario(game.scenario, vertex.scenario, "verify_synthesis");
  require_prior_shape(prior, game.scenario, "verify_synthesis");
  SynthesisVerification out;
  out.local_value = local_bound(game, prior).value;
  out.vertex_payoff = expected_payoff(game, vertex, prior).value_a;
  out.ex_post_pass = check_ex_post(game, vertex).pass;
  out.ex_ante_pass = check_ex_ante(game, vertex, prior).pass;
  out.pass = out.vertex_payoff > out.local_value && out.ex_post_pass && out.ex_ante_pass;
  return out;
}

}  // namespace nlgames
