#pragma once
// Equilibrium verifiers. None of these compute equilibria; they evaluate
// deviation margins exactly and let a caller-supplied tolerance decide the
// verdict. A margin is (payoff as advised) - (payoff after deviating), so
// equilibrium means every margin >= -tolerance.

#include <utility>
#include <vector>

#include "nlgames/model.hpp"

namespace nlgames {

struct DeviationMargin {
  Player player = Player::alice;
  int type = -1;  // -1 when the check has no type dimension
  int from = 0;
  int to = 0;
  QuadExt margin;
};

struct EquilibriumReport {
  bool pass = true;
  std::vector<DeviationMargin> margins;     // every ordered deviation pair
  std::vector<DeviationMargin> violations;  // margins below -tolerance
};

// Exact pure-Nash test of the advised cell (a, b).
EquilibriumReport check_pure_nash(const StrategicGame& game, int a, int b);

std::vector<std::pair<int, int>> pure_equilibria(const StrategicGame& game);

struct MixedProfileReport {
  EquilibriumReport report;
  QuadExt value_a;
  QuadExt value_b;
};

// Best-response test on the supports of the two mixed strategies.
MixedProfileReport check_mixed_profile(const StrategicGame& game, const std::vector<QuadExt>& row_dist,
                                       const std::vector<QuadExt>& col_dist,
                                       const QuadExt& tolerance = QuadExt(0));

EquilibriumReport check_correlated_eq(const StrategicGame& game, const JointDistribution& joint,
                                      const QuadExt& tolerance = QuadExt(0));

struct BlockReport {
  int x = 0;
  int y = 0;
  EquilibriumReport report;
};

struct ExPostReport {
  bool pass = true;
  std::vector<BlockReport> blocks;  // (x, y) lexicographic

  std::vector<std::pair<int, int>> failing_blocks() const;
};

// Every block distribution must be a correlated equilibrium of its block game.
ExPostReport check_ex_post(const Game& game, const Behavior& behavior,
                           const QuadExt& tolerance = QuadExt(0));

// Type-wise deviation test under the prior: deviating from advised action
// `from` to `to` at one's own type must not raise the weighted payoff.
EquilibriumReport check_ex_ante(const Game& game, const Behavior& behavior, const Prior& prior,
                                const QuadExt& tolerance = QuadExt(0));

}  // namespace nlgames
