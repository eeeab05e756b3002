#pragma once
// Named built-in games and behaviors, addressable from the CLI and tests.
// Strategic games: battle_of_sexes, coordination. Bayesian games: chsh_game,
// vb_game (takes the stake parameter c > 0). Behaviors: pr_box, chsh_quantum,
// vb_local_opt, vb_ns_opt, vb_quantum.

#include <optional>
#include <string>
#include <vector>

#include "nlgames/model.hpp"

namespace nlgames {

enum class PresetKind { strategic_game, game, behavior };

// Throws std::invalid_argument for unknown names.
PresetKind preset_kind(const std::string& name);
std::vector<std::string> preset_names();

Scenario chsh_scenario();  // two binary types per player, binary actions
Scenario vb_scenario();    // Alice: three types, actions 2/2/3; Bob: two binary types

StrategicGame preset_strategic_game(const std::string& name);
Game preset_game(const std::string& name, const std::optional<QuadExt>& c = std::nullopt);
Behavior preset_behavior(const std::string& name);

Prior uniform_prior(const Scenario& scenario);  // probabilities 1/(XY)
Prior unit_prior(const Scenario& scenario);     // weight 1 per type pair

// The prior each preset family is analyzed with: vb_* use unit weights,
// everything else the uniform distribution.
Prior canonical_prior(const std::string& preset_name, const Scenario& scenario);

// Validation tolerance the preset is guaranteed to meet: 0 for analytic
// tables, 2/10000 for the measured decimals of vb_quantum.
QuadExt preset_tolerance(const std::string& name);

}  // namespace nlgames
