// Acceptance gate: twelve end-to-end checks of the toolkit's headline claims,
// one [PASS]/[FAIL] line each. Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/equilibrium.hpp"
#include "nlgames/linalg.hpp"
#include "nlgames/lp.hpp"
#include "nlgames/model.hpp"
#include "nlgames/polytope.hpp"
#include "nlgames/presets.hpp"
#include "nlgames/synthesis.hpp"

using namespace nlgames;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (cond || !ok) {
      if (!cond) detail += "; " + why;
      ok = cond && ok;
      return;
    }
    ok = false;
    detail = why;
  }
};

int failures = 0;

void criterion(int n, const std::string& text, const Verdict& v) {
  std::cout << (v.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << text;
  if (!v.ok && !v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << '\n';
  if (!v.ok) ++failures;
}

template <typename Fn>
Verdict guarded(Fn&& fn) {
  Verdict v;
  try {
    fn(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string show_blocks(const std::vector<std::pair<int, int>>& blocks) {
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << "(" << blocks[i].first << "," << blocks[i].second << ")";
  }
  return os.str();
}

Game random_game(const Scenario& sc, std::mt19937& rng, bool common) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  auto table = [&] {
    std::vector<QuadExt> t;
    for (int i = 0; i < sc.coords(); ++i) t.push_back(QuadExt(Rational(num(rng), den(rng))));
    return t;
  };
  if (common) return Game{sc, table(), {}};
  return Game{sc, table(), table()};
}

// Independent optimum: solve the inequality system by enumerating candidate
// tight sets, as in the unit suite.
std::optional<Rational> enumerate_max(const std::vector<LinearConstraint<Rational>>& rows,
                                      const std::vector<Rational>& obj) {
  const int n = static_cast<int>(obj.size());
  const int m = static_cast<int>(rows.size());
  std::optional<Rational> best;
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + n, true);
  do {
    std::vector<std::vector<Rational>> aug;
    for (int i = 0; i < m; ++i)
      if (mask[i]) {
        std::vector<Rational> r = rows[i].coeffs;
        r.push_back(rows[i].rhs);
        aug.push_back(std::move(r));
      }
    std::vector<int> piv = row_echelon(aug, n + 1);
    if (static_cast<int>(piv.size()) != n || piv.back() == n) continue;
    std::vector<Rational> x(n);
    for (int r = 0; r < n; ++r) x[piv[r]] = aug[r][n];
    bool feasible = true;
    for (const auto& c : rows) {
      Rational lhs;
      for (int j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
      if (lhs > c.rhs) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Rational value;
    for (int j = 0; j < n; ++j) value += obj[j] * x[j];
    if (!best || value > *best) best = value;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

}  // namespace

int main() {
  const Game chsh = preset_game("chsh_game");
  const Prior chsh_uniform = uniform_prior(chsh.scenario);
  const Behavior pr = preset_behavior("pr_box");
  const Behavior quantum = preset_behavior("chsh_quantum");

  criterion(1, "binary-scenario bounds are 1/2 local and 1 no-signaling (2 and 4 rescaled), under 1 s",
            guarded([&](Verdict& v) {
              auto start = std::chrono::steady_clock::now();
              BoundResult local = local_bound(chsh, chsh_uniform);
              BoundResult ns = ns_bound(chsh, chsh_uniform);
              double elapsed = seconds_since(start);
              v.require(local.value == QuadExt(Rational(1, 2)), "local bound is not 1/2");
              v.require(ns.value == QuadExt(1), "no-signaling bound is not 1");
              v.require(local.value * QuadExt(4) == QuadExt(2), "rescaled local bound is not 2");
              v.require(ns.value * QuadExt(4) == QuadExt(4), "rescaled no-signaling bound is not 4");
              v.require(elapsed < 1.0, "bounds took " + std::to_string(elapsed) + " s");
            }));

  criterion(2, "the quantum box's expected payoff is exactly sqrt2/2",
            guarded([&](Verdict& v) {
              PayoffPair value = expected_payoff(chsh, quantum, chsh_uniform);
              v.require(value.value_a == QuadExt(0, Rational(1, 2)), "value_a is not sqrt2/2");
              v.require(value.value_b == value.value_a, "players disagree on a common payoff");
            }));

  criterion(3, "extreme and quantum boxes are equilibria blockwise and on average, at tolerance 0",
            guarded([&](Verdict& v) {
              for (const Behavior* beh : {&pr, &quantum}) {
                ExPostReport post = check_ex_post(chsh, *beh);
                v.require(post.pass && post.blocks.size() == 4, "an ex post block fails");
                v.require(check_ex_ante(chsh, *beh, chsh_uniform).pass, "the ex ante check fails");
              }
            }));

  criterion(4, "three-type stake game: local bound 1 for stakes 1/2, 1, 2, 4, all-zero strategy maximizing",
            guarded([&](Verdict& v) {
              Prior unit = unit_prior(vb_scenario());
              for (const Rational& c : {Rational(1, 2), Rational(1), Rational(2), Rational(4)}) {
                BoundResult lb = local_bound(preset_game("vb_game", QuadExt(c)), unit);
                v.require(lb.value == QuadExt(1), "local bound is not 1 at stake " + render_scalar(QuadExt(c)));
                v.require(lb.strategy.has_value() &&
                              lb.strategy->alice_map == std::vector<int>{0, 0, 0} &&
                              lb.strategy->bob_map == std::vector<int>{0, 0},
                          "the all-zero strategy is not among the maximizers");
              }
            }));

  criterion(5, "stake game no-signaling bound is c/2 + 1/2 for stakes 2 and 4, attained by the optimal box",
            guarded([&](Verdict& v) {
              Prior unit = unit_prior(vb_scenario());
              Behavior opt = preset_behavior("vb_ns_opt");
              for (int c : {2, 4}) {
                Game game = preset_game("vb_game", QuadExt(c));
                QuadExt expected(Rational(c, 2) + Rational(1, 2));
                v.require(ns_bound(game, unit).value == expected,
                          "bound mismatch at stake " + std::to_string(c));
                v.require(expected_payoff(game, opt, unit).value_a == expected,
                          "the optimal box does not attain the bound at stake " + std::to_string(c));
              }
            }));

  criterion(6, "stability split at stake 2: blockwise check fails only in block (2,0) with margin -sqrt2/8, averaged check passes",
            guarded([&](Verdict& v) {
              Game vb2 = preset_game("vb_game", QuadExt(2));
              Behavior opt = preset_behavior("vb_ns_opt");
              ExPostReport post = check_ex_post(vb2, opt);
              auto failing = post.failing_blocks();
              v.require(!post.pass && failing == std::vector<std::pair<int, int>>{{2, 0}},
                        "failing blocks are {" + show_blocks(failing) + "}");
              bool margin_found = false;
              for (const auto& block : post.blocks)
                if (block.x == 2 && block.y == 0)
                  for (const auto& m : block.report.violations)
                    if (m.player == Player::alice && m.from == 0 && m.to == 1 &&
                        m.margin == QuadExt(0, Rational(-1, 8)))
                      margin_found = true;
              v.require(margin_found, "the 0->1 deviation margin -sqrt2/8 was not reported");
              v.require(check_ex_ante(vb2, opt, unit_prior(vb2.scenario)).pass,
                        "the averaged check fails");
            }));

  criterion(7, "measured box: valid at 2e-4 not at 0; at stake 4 the blockwise check fails exactly in blocks (2,0) and (2,1) at 1e-3, the averaged check passes, and the payoff lies in [1.20, 1.22]",
            guarded([&](Verdict& v) {
              Behavior q = preset_behavior("vb_quantum");
              v.require(validate_behavior(q, QuadExt(Rational(2, 10000))).valid(),
                        "not valid at tolerance 2e-4");
              v.require(!validate_behavior(q).valid(), "valid at tolerance 0");
              Game vb4 = preset_game("vb_game", QuadExt(4));
              QuadExt tol(Rational(1, 1000));
              auto failing = check_ex_post(vb4, q, tol).failing_blocks();
              v.require(failing == std::vector<std::pair<int, int>>{{2, 0}, {2, 1}},
                        "failing blocks are {" + show_blocks(failing) + "}");
              v.require(check_ex_ante(vb4, q, unit_prior(vb4.scenario), tol).pass,
                        "the averaged check fails at 1e-3");
              QuadExt payoff = expected_payoff(vb4, q, unit_prior(vb4.scenario)).value_a;
              v.require(QuadExt(Rational(6, 5)) <= payoff && payoff <= QuadExt(Rational(61, 50)),
                        "payoff " + approx_decimal(payoff, 4) + " outside [1.20, 1.22]");
            }));

  criterion(8, "classification: the extreme box is nonlocal, the uniform box is local with an exact certificate, every deterministic box is local",
            guarded([&](Verdict& v) {
              v.require(classify_behavior(pr).cls == BehaviorClass::nonlocal_ns,
                        "the extreme box does not classify nonlocal_ns");
              Behavior noise = uniform_behavior(chsh.scenario);
              ClassifyResult mixed = classify_behavior(noise);
              v.require(mixed.cls == BehaviorClass::local, "the uniform box does not classify local");
              auto strategies = enumerate_local_strategies(chsh.scenario);
              QuadExt total(0);
              std::vector<QuadExt> remix(chsh.scenario.coords(), QuadExt(0));
              bool nonneg = true;
              for (size_t k = 0; k < strategies.size(); ++k) {
                const QuadExt& w = mixed.certificate.weights[k];
                if (w.sign() < 0) nonneg = false;
                total += w;
                Behavior det = deterministic_behavior(chsh.scenario, strategies[k].alice_map,
                                                      strategies[k].bob_map);
                for (int i = 0; i < chsh.scenario.coords(); ++i) remix[i] += w * det.p[i];
              }
              v.require(nonneg && total == QuadExt(1) && remix == noise.p,
                        "the certificate is not an exact convex decomposition");
              for (const auto& s : strategies) {
                Behavior det = deterministic_behavior(chsh.scenario, s.alice_map, s.bob_map);
                v.require(classify_behavior(det).cls == BehaviorClass::local,
                          "a deterministic box does not classify local");
              }
            }));

  criterion(9, "binary-scenario vertex enumeration finds exactly 24 vertices, 16 local and 8 nonlocal, under 30 s",
            guarded([&](Verdict& v) {
              auto start = std::chrono::steady_clock::now();
              VertexList list = enumerate_ns_vertices(chsh.scenario);
              double elapsed = seconds_since(start);
              v.require(list.vertices.size() == 24, "vertex count is " + std::to_string(list.vertices.size()));
              v.require(list.local_count() == 16 && list.nonlocal_count() == 8,
                        "split is " + std::to_string(list.local_count()) + " local, " +
                            std::to_string(list.nonlocal_count()) + " nonlocal");
              v.require(elapsed < 30.0, "enumeration took " + std::to_string(elapsed) + " s");
            }));

  criterion(10, "synthesis round-trip: the extreme box yields a positive gap that verifies at 0, and the binary-scenario payoff meets the constraint system with gap 1/2 in box 1",
            guarded([&](Verdict& v) {
              SynthesisResult built = synthesize_game(pr);
              v.require(built.ok() && built.gap.sign() > 0, "synthesis did not return a positive gap");
              v.require(verify_synthesis(built.game, pr, chsh_uniform).pass,
                        "verification fails at tolerance 0");
              ConstraintAudit audit = check_synthesis_constraints(chsh, pr, chsh_uniform);
              v.require(audit.min_separation >= QuadExt(Rational(1, 2)),
                        "separation below 1/2: " + render_scalar(audit.min_separation));
              v.require(audit.min_ce_margin.sign() >= 0, "a block equilibrium margin is negative");
              v.require(audit.max_abs_payoff <= QuadExt(1), "a payoff leaves the unit box");
            }));

  criterion(11, "strategic checks: the 2x2 conflict game has pure equilibria {(0,0),(1,1)} and mixed value (2/3,2/3); the half-half diagonal joint is a correlated equilibrium",
            guarded([&](Verdict& v) {
              StrategicGame bos = preset_strategic_game("battle_of_sexes");
              auto pure = pure_equilibria(bos);
              v.require(pure == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}},
                        "pure equilibria differ");
              QuadExt third(Rational(1, 3));
              MixedProfileReport mixed = check_mixed_profile(
                  bos, {QuadExt(Rational(2, 3)), third}, {third, QuadExt(Rational(2, 3))});
              v.require(mixed.report.pass, "the mixed profile fails");
              v.require(mixed.value_a == QuadExt(Rational(2, 3)) && mixed.value_b == mixed.value_a,
                        "the mixed value is not (2/3, 2/3)");
              JointDistribution diag;
              diag.rows = diag.cols = 2;
              diag.p = {QuadExt(Rational(1, 2)), QuadExt(0), QuadExt(0), QuadExt(Rational(1, 2))};
              v.require(check_correlated_eq(preset_strategic_game("coordination"), diag).pass,
                        "the diagonal joint fails the correlated test");
            }));

  criterion(12, "property suites: bound sandwich on 50 random games, averaged-equilibrium property of the optimum on 100 random common-payoff games, solver agreement with tight-set enumeration on 30 random programs",
            guarded([&](Verdict& v) {
              std::mt19937 rng(20240816);
              for (int trial = 0; trial < 50; ++trial) {
                Game g = random_game(chsh.scenario, rng, trial % 2 == 0);
                BoundResult lb = local_bound(g, chsh_uniform);
                BoundResult nb = ns_bound(g, chsh_uniform);
                v.require(lb.value <= nb.value, "the local bound exceeds the no-signaling bound");
                v.require(expected_payoff(g, lb.witness, chsh_uniform).value_a == lb.value &&
                              expected_payoff(g, nb.witness, chsh_uniform).value_a == nb.value,
                          "a bound witness does not attain its bound");
              }
              for (int trial = 0; trial < 100; ++trial) {
                Game g = random_game(chsh.scenario, rng, true);
                BoundResult nb = ns_bound(g, chsh_uniform);
                v.require(check_ex_ante(g, nb.witness, chsh_uniform).pass,
                          "a common-payoff optimum is not an averaged equilibrium");
              }
              std::uniform_int_distribution<int> coeff(-3, 3), rhs(0, 6), bound(1, 3), objc(-5, 5);
              const int n = 3;
              for (int trial = 0; trial < 30; ++trial) {
                LinearProgram<Rational> lp;
                lp.num_vars = n;
                for (int j = 0; j < n; ++j) lp.objective.push_back(Rational(objc(rng)));
                std::vector<LinearConstraint<Rational>> all_rows;
                for (int i = 0; i < 3; ++i) {
                  std::vector<Rational> c;
                  for (int j = 0; j < n; ++j) c.push_back(Rational(coeff(rng)));
                  Rational r(rhs(rng));
                  lp.le.push_back({c, r});
                  all_rows.push_back({std::move(c), std::move(r)});
                }
                for (int j = 0; j < n; ++j) {
                  Rational u(bound(rng));
                  lp.lower.push_back(Rational(0));
                  lp.upper.push_back(u);
                  std::vector<Rational> down(n, Rational(0)), up(n, Rational(0));
                  down[j] = Rational(-1);
                  up[j] = Rational(1);
                  all_rows.push_back({std::move(down), Rational(0)});
                  all_rows.push_back({std::move(up), std::move(u)});
                }
                auto out = solve(lp);
                auto oracle = enumerate_max(all_rows, lp.objective);
                v.require(out.status == LpStatus::optimal && oracle && out.value == *oracle,
                          "a solver optimum disagrees with tight-set enumeration");
              }
            }));

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures;
}
