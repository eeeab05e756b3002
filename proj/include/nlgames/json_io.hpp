#pragma once
// JSON wire format. All scalars travel as strings in the scalar-literal
// grammar; integer JSON numbers are accepted on input for convenience.

#include <json.hpp>

#include "nlgames/model.hpp"

namespace nlgames {

nlohmann::json scenario_to_json(const Scenario& sc);
nlohmann::json game_to_json(const Game& g);
nlohmann::json behavior_to_json(const Behavior& b);
nlohmann::json prior_to_json(const Prior& p);
nlohmann::json strategic_game_to_json(const StrategicGame& g);

Scenario scenario_from_json(const nlohmann::json& j);
Game game_from_json(const nlohmann::json& j);
Behavior behavior_from_json(const nlohmann::json& j);
Prior prior_from_json(const nlohmann::json& j);
StrategicGame strategic_game_from_json(const nlohmann::json& j);

enum class DocKind { scenario, game, behavior, prior, strategic_game };
DocKind detect_document(const nlohmann::json& j);

}  // namespace nlgames
