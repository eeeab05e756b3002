#include "nlgames/equilibrium.hpp"

#include <stdexcept>
#include <string>

namespace nlgames {
namespace {

void finish(EquilibriumReport& report, const QuadExt& tolerance) {
  for (const auto& m : report.margins)
    if (m.margin < -tolerance) report.violations.push_back(m);
  report.pass = report.violations.empty();
}

void require_cell(const StrategicGame& game, int a, int b) {
  if (a < 0 || a >= game.rows || b < 0 || b >= game.cols)
    throw std::out_of_range("check_pure_nash: action out of range");
}

void require_distribution(const std::vector<QuadExt>& dist, int size, const QuadExt& tolerance,
                          const char* who) {
  if (static_cast<int>(dist.size()) != size)
    throw std::invalid_argument(std::string(who) + ": distribution has wrong length");
  QuadExt sum(0);
  for (const auto& v : dist) {
    if (v.sign() < 0) throw std::invalid_argument(std::string(who) + ": negative probability");
    sum += v;
  }
  if ((sum - QuadExt(1)).abs() > tolerance)
    throw std::invalid_argument(std::string(who) + ": probabilities do not sum to 1");
}

}  // namespace

EquilibriumReport check_pure_nash(const StrategicGame& game, int a, int b) {
  require_cell(game, a, b);
  EquilibriumReport report;
  for (int a2 = 0; a2 < game.rows; ++a2) {
    if (a2 == a) continue;
    report.margins.push_back({Player::alice, -1, a, a2, game.a(a, b) - game.a(a2, b)});
  }
  for (int b2 = 0; b2 < game.cols; ++b2) {
    if (b2 == b) continue;
    report.margins.push_back({Player::bob, -1, b, b2, game.b(a, b) - game.b(a, b2)});
  }
  finish(report, QuadExt(0));
  return report;
}

std::vector<std::pair<int, int>> pure_equilibria(const StrategicGame& game) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < game.rows; ++a)
    for (int b = 0; b < game.cols; ++b)
      if (check_pure_nash(game, a, b).pass) out.emplace_back(a, b);
  return out;
}

MixedProfileReport check_mixed_profile(const StrategicGame& game, const std::vector<QuadExt>& row_dist,
                                       const std::vector<QuadExt>& col_dist, const QuadExt& tolerance) {
  require_distribution(row_dist, game.rows, tolerance, "check_mixed_profile (rows)");
  require_distribution(col_dist, game.cols, tolerance, "check_mixed_profile (cols)");

  std::vector<QuadExt> row_payoff(game.rows, QuadExt(0));  // Alice's payoff per row vs col_dist
  std::vector<QuadExt> col_payoff(game.cols, QuadExt(0));  // Bob's payoff per column vs row_dist
  for (int i = 0; i < game.rows; ++i)
    for (int j = 0; j < game.cols; ++j) {
      row_payoff[i] += col_dist[j] * game.a(i, j);
      col_payoff[j] += row_dist[i] * game.b(i, j);
    }

  MixedProfileReport out;
  for (int i = 0; i < game.rows; ++i) out.value_a += row_dist[i] * row_payoff[i];
  for (int j = 0; j < game.cols; ++j) out.value_b += col_dist[j] * col_payoff[j];

  for (int i = 0; i < game.rows; ++i) {
    if (row_dist[i].sign() <= 0) continue;  // deviations only from played rows
    for (int k = 0; k < game.rows; ++k) {
      if (k == i) continue;
      out.report.margins.push_back({Player::alice, -1, i, k, row_payoff[i] - row_payoff[k]});
    }
  }
  for (int j = 0; j < game.cols; ++j) {
    if (col_dist[j].sign() <= 0) continue;
    for (int k = 0; k < game.cols; ++k) {
      if (k == j) continue;
      out.report.margins.push_back({Player::bob, -1, j, k, col_payoff[j] - col_payoff[k]});
    }
  }
  finish(out.report, tolerance);
  return out;
}

EquilibriumReport check_correlated_eq(const StrategicGame& game, const JointDistribution& joint,
                                      const QuadExt& tolerance) {
  if (joint.rows != game.rows || joint.cols != game.cols)
    throw std::invalid_argument("check_correlated_eq: joint distribution shape mismatch");
  QuadExt sum(0);
  for (const auto& v : joint.p) {
    if (v < -tolerance) throw std::invalid_argument("check_correlated_eq: negative probability");
    sum += v;
  }
  if ((sum - QuadExt(1)).abs() > tolerance)
    throw std::invalid_argument("check_correlated_eq: probabilities do not sum to 1");

  EquilibriumReport report;
  for (int a = 0; a < game.rows; ++a)
    for (int a2 = 0; a2 < game.rows; ++a2) {
      if (a2 == a) continue;
      QuadExt margin(0);
      for (int b = 0; b < game.cols; ++b)
        margin += joint.at(a, b) * (game.a(a, b) - game.a(a2, b));
      report.margins.push_back({Player::alice, -1, a, a2, std::move(margin)});
    }
  for (int b = 0; b < game.cols; ++b)
    for (int b2 = 0; b2 < game.cols; ++b2) {
      if (b2 == b) continue;
      QuadExt margin(0);
      for (int a = 0; a < game.rows; ++a)
        margin += joint.at(a, b) * (game.b(a, b) - game.b(a, b2));
      report.margins.push_back({Player::bob, -1, b, b2, std::move(margin)});
    }
  finish(report, tolerance);
  return report;
}

std::vector<std::pair<int, int>> ExPostReport::failing_blocks() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& block : blocks)
    if (!block.report.pass) out.emplace_back(block.x, block.y);
  return out;
}

ExPostReport check_ex_post(const Game& game, const Behavior& behavior, const QuadExt& tolerance) {
  require_same_scenario(game.scenario, behavior.scenario, "check_ex_post");
  ValidationReport validation = validate_behavior(behavior, tolerance);
  if (!validation.valid()) {
    std::string msg = "check_ex_post: behavior fails validation";
    if (!validation.issues.empty()) msg += ": " + validation.issues.front().describe();
    throw std::invalid_argument(msg);
  }
  ExPostReport out;
  for (int x = 0; x < game.scenario.num_x(); ++x)
    for (int y = 0; y < game.scenario.num_y(); ++y) {
      BlockReport block{x, y,
                        check_correlated_eq(block_game(game, x, y),
                                            block_distribution(behavior, x, y), tolerance)};
      out.pass = out.pass && block.report.pass;
      out.blocks.push_back(std::move(block));
    }
  return out;
}

EquilibriumReport check_ex_ante(const Game& game, const Behavior& behavior, const Prior& prior,
                                const QuadExt& tolerance) {
  require_same_scenario(game.scenario, behavior.scenario, "check_ex_ante");
  require_prior_shape(prior, game.scenario, "check_ex_ante");
  ValidationReport validation = validate_behavior(behavior, tolerance);
  if (!validation.valid()) {
    std::string msg = "check_ex_ante: behavior fails validation";
    if (!validation.issues.empty()) msg += ": " + validation.issues.front().describe();
    throw std::invalid_argument(msg);
  }
  const Scenario& sc = game.scenario;
  EquilibriumReport report;
  for (int x = 0; x < sc.num_x(); ++x)
    for (int a = 0; a < sc.actions_a(x); ++a)
      for (int a2 = 0; a2 < sc.actions_a(x); ++a2) {
        if (a2 == a) continue;
        QuadExt margin(0);
        for (int y = 0; y < sc.num_y(); ++y)
          for (int b = 0; b < sc.actions_b(y); ++b)
            margin += prior.at(x, y) * behavior.at(x, y, a, b) *
                      (game.payoff(Player::alice, x, y, a, b) -
                       game.payoff(Player::alice, x, y, a2, b));
        report.margins.push_back({Player::alice, x, a, a2, std::move(margin)});
      }
  for (int y = 0; y < sc.num_y(); ++y)
    for (int b = 0; b < sc.actions_b(y); ++b)
      for (int b2 = 0; b2 < sc.actions_b(y); ++b2) {
        if (b2 == b) continue;
        QuadExt margin(0);
        for (int x = 0; x < sc.num_x(); ++x)
          for (int a = 0; a < sc.actions_a(x); ++a)
            margin += prior.at(x, y) * behavior.at(x, y, a, b) *
                      (game.payoff(Player::bob, x, y, a, b) -
                       game.payoff(Player::bob, x, y, a, b2));
        report.margins.push_back({Player::bob, y, b, b2, std::move(margin)});
      }
  finish(report, tolerance);
  return report;
}

}  // namespace nlgames
