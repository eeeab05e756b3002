#pragma once
// Data model: scenarios with per-type action counts, games, behaviors,
// priors, block extraction and structural validation.

#include <array>
#include <string>
#include <vector>

#include "nlgames/numeric.hpp"

namespace nlgames {

enum class Player { alice, bob };

// Type counts and per-type action counts for the two players. Action tables
// are ragged: |A(x)| may differ across x. Coordinates (x,y,a,b) are flattened
// lexicographically; coords() is the behavior-vector dimension.
class Scenario {
 public:
  Scenario() = default;
  Scenario(std::vector<int> alice_actions, std::vector<int> bob_actions);

  int num_x() const { return static_cast<int>(a_.size()); }
  int num_y() const { return static_cast<int>(b_.size()); }
  int actions_a(int x) const { return a_.at(x); }
  int actions_b(int y) const { return b_.at(y); }
  const std::vector<int>& alice_actions() const { return a_; }
  const std::vector<int>& bob_actions() const { return b_; }

  int coords() const { return coords_; }
  int index(int x, int y, int a, int b) const;
  std::array<int, 4> decode(int idx) const;  // inverse of index()

  bool operator==(const Scenario& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scenario& o) const { return !(*this == o); }

 private:
  std::vector<int> a_, b_;
  std::vector<int> offset_;  // block start per flattened (x,y)
  int coords_ = 0;
};

struct Behavior {
  Scenario scenario;
  std::vector<QuadExt> p;  // coords()-sized, P(a,b|x,y) at scenario.index(x,y,a,b)

  const QuadExt& at(int x, int y, int a, int b) const { return p[scenario.index(x, y, a, b)]; }
  QuadExt& at(int x, int y, int a, int b) { return p[scenario.index(x, y, a, b)]; }
};

// payoff_b empty means a common-payoff game (u_B = u_A).
struct Game {
  Scenario scenario;
  std::vector<QuadExt> payoff_a;
  std::vector<QuadExt> payoff_b;

  bool common() const { return payoff_b.empty(); }
  const QuadExt& payoff(Player pl, int x, int y, int a, int b) const {
    const auto& t = (pl == Player::bob && !common()) ? payoff_b : payoff_a;
    return t[scenario.index(x, y, a, b)];
  }
};

// Nonnegative type-pair weights, at least one positive. Not necessarily
// normalized: unit weights are as legitimate as probability priors.
struct Prior {
  int num_x = 0, num_y = 0;
  std::vector<QuadExt> w;  // row-major x*num_y + y

  const QuadExt& at(int x, int y) const { return w[static_cast<size_t>(x) * num_y + y]; }
};

struct StrategicGame {
  int rows = 0, cols = 0;
  std::vector<QuadExt> payoff_a;
  std::vector<QuadExt> payoff_b;  // empty means common payoff

  bool common() const { return payoff_b.empty(); }
  const QuadExt& a(int i, int j) const { return payoff_a[static_cast<size_t>(i) * cols + j]; }
  const QuadExt& b(int i, int j) const {
    return (common() ? payoff_a : payoff_b)[static_cast<size_t>(i) * cols + j];
  }
};

struct JointDistribution {
  int rows = 0, cols = 0;
  std::vector<QuadExt> p;

  const QuadExt& at(int i, int j) const { return p[static_cast<size_t>(i) * cols + j]; }
  QuadExt& at(int i, int j) { return p[static_cast<size_t>(i) * cols + j]; }
};

StrategicGame block_game(const Game& game, int x, int y);
JointDistribution block_distribution(const Behavior& behavior, int x, int y);

struct ValidationIssue {
  enum class Kind { negative_entry, block_sum, alice_marginal, bob_marginal };
  Kind kind;
  // negative_entry: (x,y,a,b); block_sum: (x,y);
  // alice_marginal: x, a, blocks y vs y2; bob_marginal: y, b, blocks x vs x2.
  int x = -1, y = -1, a = -1, b = -1, x2 = -1, y2 = -1;
  QuadExt residual;

  std::string describe() const;
};

struct ValidationReport {
  bool nonneg_normalized = false;
  bool alice_no_signaling = false;
  bool bob_no_signaling = false;
  std::vector<ValidationIssue> issues;

  bool valid() const { return nonneg_normalized && alice_no_signaling && bob_no_signaling; }
  bool signaling() const {
    return nonneg_normalized && !(alice_no_signaling && bob_no_signaling);
  }
};

// Checks nonnegativity, per-block normalization, and the marginal equalities
// (Alice's marginals independent of y, Bob's of x), each within `tolerance`.
// Marginal residuals are listed for consecutive type pairs.
ValidationReport validate_behavior(const Behavior& behavior, const QuadExt& tolerance = QuadExt(0));

Behavior deterministic_behavior(const Scenario& scenario, const std::vector<int>& alice_map,
                                const std::vector<int>& bob_map);
Behavior uniform_behavior(const Scenario& scenario);

void require_same_scenario(const Scenario& a, const Scenario& b, const char* where);
void require_prior_shape(const Prior& prior, const Scenario& scenario, const char* where);

}  // namespace nlgames
