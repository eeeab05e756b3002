#pragma once
// Expected payoffs, the local and no-signaling bounds with witnesses, behavior
// classification, and the side-by-side gap report.

#include <optional>
#include <string>
#include <vector>

#include "nlgames/model.hpp"
#include "nlgames/parallel.hpp"
#include "nlgames/polytope.hpp"

namespace nlgames {

struct PayoffPair {
  QuadExt value_a;
  QuadExt value_b;
};

// Prior-weighted payoff of the behavior; equal components for common payoff.
PayoffPair expected_payoff(const Game& game, const Behavior& behavior, const Prior& prior);

// witness is a behavior attaining value; the local bound also reports the
// deterministic strategy pair behind it.
struct BoundResult {
  QuadExt value;
  Behavior witness;
  std::optional<LocalStrategy> strategy;
  bool attained_at_vertex = false;
};

// Maximizes the selected player's weighted payoff over all deterministic
// strategy pairs by exhaustive scan; ties go to the lexicographically first.
BoundResult local_bound(const Game& game, const Prior& prior, Player selector = Player::alice,
                        ExecMode mode = ExecMode::parallel);

// Maximizes over the whole no-signaling polytope by exact LP.
BoundResult ns_bound(const Game& game, const Prior& prior, Player selector = Player::alice);

enum class BehaviorClass { signaling, local, nonlocal_ns };

struct ClassifyResult {
  BehaviorClass cls = BehaviorClass::signaling;
  LocalityCertificate certificate;  // populated when local
};

// signaling if the marginal equalities fail (within tolerance), local if an
// exact convex decomposition over deterministic strategies exists, else
// nonlocal_ns. Broken tables (negative entries, bad block sums) are errors.
ClassifyResult classify_behavior(const Behavior& behavior, const QuadExt& tolerance = QuadExt(0));

struct NamedBehavior {
  std::string name;
  Behavior behavior;
};

struct GapRow {
  std::string name;
  QuadExt payoff;
  bool ex_post = false;
  bool ex_ante = false;
};

struct GapReport {
  Player selector = Player::alice;
  std::vector<GapRow> rows;  // local bound, the named behaviors, NS bound
};

GapReport gap_report(const Game& game, const Prior& prior,
                     const std::vector<NamedBehavior>& behaviors,
                     const QuadExt& tolerance = QuadExt(0));

// Fixed four-column plaintext table: name, payoff, ex post, ex ante.
// rescale4 multiplies payoffs by 4; approx_digits > 0 appends a decimal.
std::string render_gap_report(const GapReport& report, bool rescale4 = false,
                              int approx_digits = 0);

}  // namespace nlgames
