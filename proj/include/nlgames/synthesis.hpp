#pragma once
// Game construction from a nonlocal no-signaling vertex: find a common payoff
// under which the vertex is an ex post equilibrium while every deterministic
// strategy earns at least a gap epsilon less, maximizing that gap.

#include <optional>
#include <string>

#include "nlgames/model.hpp"
#include "nlgames/parallel.hpp"

namespace nlgames {

struct SynthesisOptions {
  QuadExt payoff_box = QuadExt(1);    // payoffs constrained to [-box, box]
  std::optional<Prior> prior;         // weights for the gap; default uniform
  bool require_ns_optimum = false;    // also dominate every NS vertex
  std::optional<QuadExt> minimum_gap; // hard lower bound on epsilon
  ExecMode mode = ExecMode::parallel;
  int max_coords = 32;                // enumeration ceiling for require_ns_optimum
};

enum class SynthesisStatus {
  ok,                   // gap > 0, game returned
  nonpositive_gap,      // LP solved but the best gap is <= 0
  lp_infeasible,        // constraints contradict (reachable via minimum_gap)
  rejected_not_vertex,  // input is in the polytope but not extreme
  rejected_local,       // input is a local vertex; no separating payoff exists
};

struct SynthesisResult {
  SynthesisStatus status = SynthesisStatus::lp_infeasible;
  Game game;        // populated when the LP reached an optimum
  QuadExt gap;      // the optimal epsilon
  std::string detail;

  bool ok() const { return status == SynthesisStatus::ok; }
};

SynthesisResult synthesize_game(const Behavior& vertex, const SynthesisOptions& options = {});

// Audit of a candidate payoff against the synthesis constraint system.
struct ConstraintAudit {
  QuadExt min_separation;  // worst payoff lead over a deterministic strategy
  QuadExt min_ce_margin;   // worst correlated-equilibrium margin over blocks
  QuadExt max_abs_payoff;
};

ConstraintAudit check_synthesis_constraints(const Game& game, const Behavior& vertex,
                                            const Prior& prior);

struct SynthesisVerification {
  bool pass = false;
  QuadExt local_value;
  QuadExt vertex_payoff;
  bool ex_post_pass = false;
  bool ex_ante_pass = false;
};

// Recomputes the separation and both equilibrium checks at tolerance zero.
SynthesisVerification verify_synthesis(const Game& game, const Behavior& vertex,
                                       const Prior& prior);

}  // namespace nlgames
