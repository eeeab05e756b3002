#include "nlgames/json_io.hpp"

namespace nlgames {

using nlohmann::json;

namespace {

QuadExt scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return QuadExt(Rational(j.get<long>()));
  if (j.is_number())
    throw ParseError(where + ": non-integer JSON numbers lose exactness; write the value as a "
                             "quoted scalar string");
  throw ParseError(where + ": expected a scalar string");
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing member '" + key + "'");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a nonempty array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(where + ": expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

// nested [x][y][a][b] table of scalars, ragged per the scenario
std::vector<QuadExt> coord_table_from_json(const json& j, const Scenario& sc,
                                           const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != sc.num_x())
    throw ParseError(where + ": expected " + std::to_string(sc.num_x()) + " type-x entries");
  std::vector<QuadExt> out(sc.coords());
  for (int x = 0; x < sc.num_x(); ++x) {
    const json& jx = j.at(x);
    if (!jx.is_array() || static_cast<int>(jx.size()) != sc.num_y())
      throw ParseError(where + "[" + std::to_string(x) + "]: expected " +
                       std::to_string(sc.num_y()) + " type-y entries");
    for (int y = 0; y < sc.num_y(); ++y) {
      const json& jy = jx.at(y);
      if (!jy.is_array() || static_cast<int>(jy.size()) != sc.actions_a(x))
        throw ParseError(where + "[" + std::to_string(x) + "][" + std::to_string(y) +
                         "]: expected " + std::to_string(sc.actions_a(x)) + " rows");
      for (int a = 0; a < sc.actions_a(x); ++a) {
        const json& ja = jy.at(a);
        if (!ja.is_array() || static_cast<int>(ja.size()) != sc.actions_b(y))
          throw ParseError(where + "[" + std::to_string(x) + "][" + std::to_string(y) + "][" +
                           std::to_string(a) + "]: expected " + std::to_string(sc.actions_b(y)) +
                           " columns");
        for (int b = 0; b < sc.actions_b(y); ++b)
          out[sc.index(x, y, a, b)] = scalar_from_json(
              ja.at(b), where + "[" + std::to_string(x) + "][" + std::to_string(y) + "][" +
                            std::to_string(a) + "][" + std::to_string(b) + "]");
      }
    }
  }
  return out;
}

json coord_table_to_json(const std::vector<QuadExt>& t, const Scenario& sc) {
  json jx = json::array();
  for (int x = 0; x < sc.num_x(); ++x) {
    json jy = json::array();
    for (int y = 0; y < sc.num_y(); ++y) {
      json ja = json::array();
      for (int a = 0; a < sc.actions_a(x); ++a) {
        json jb = json::array();
        for (int b = 0; b < sc.actions_b(y); ++b) jb.push_back(render_scalar(t[sc.index(x, y, a, b)]));
        ja.push_back(std::move(jb));
      }
      jy.push_back(std::move(ja));
    }
    jx.push_back(std::move(jy));
  }
  return jx;
}

// rectangular matrix of scalars, r rows by c cols
std::vector<QuadExt> matrix_from_json(const json& j, int r, int c, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != r)
    throw ParseError(where + ": expected " + std::to_string(r) + " rows");
  std::vector<QuadExt> out;
  out.reserve(static_cast<size_t>(r) * c);
  for (int i = 0; i < r; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != c)
      throw ParseError(where + ": expected " + std::to_string(c) + " columns");
    for (int k = 0; k < c; ++k)
      out.push_back(scalar_from_json(row.at(k), where + "[" + std::to_string(i) + "][" +
                                                    std::to_string(k) + "]"));
  }
  return out;
}

json matrix_to_json(const std::vector<QuadExt>& m, int r, int c) {
  json out = json::array();
  for (int i = 0; i < r; ++i) {
    json row = json::array();
    for (int k = 0; k < c; ++k) row.push_back(render_scalar(m[static_cast<size_t>(i) * c + k]));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

json scenario_to_json(const Scenario& sc) {
  return json{{"alice_actions", sc.alice_actions()}, {"bob_actions", sc.bob_actions()}};
}

Scenario scenario_from_json(const json& j) {
  std::vector<int> a = int_list(member(j, "alice_actions", "scenario"), "scenario.alice_actions");
  std::vector<int> b = int_list(member(j, "bob_actions", "scenario"), "scenario.bob_actions");
  try {
    return Scenario(std::move(a), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

json game_to_json(const Game& g) {
  json out{{"scenario", scenario_to_json(g.scenario)},
           {"payoff_a", coord_table_to_json(g.payoff_a, g.scenario)}};
  if (!g.common()) out["payoff_b"] = coord_table_to_json(g.payoff_b, g.scenario);
  return out;
}

Game game_from_json(const json& j) {
  Game g;
  g.scenario = scenario_from_json(member(j, "scenario", "game"));
  g.payoff_a = coord_table_from_json(member(j, "payoff_a", "game"), g.scenario, "game.payoff_a");
  if (j.contains("payoff_b"))
    g.payoff_b = coord_table_from_json(j.at("payoff_b"), g.scenario, "game.payoff_b");
  return g;
}

json behavior_to_json(const Behavior& b) {
  return json{{"scenario", scenario_to_json(b.scenario)},
              {"p", coord_table_to_json(b.p, b.scenario)}};
}

Behavior behavior_from_json(const json& j) {
  Behavior b;
  b.scenario = scenario_from_json(member(j, "scenario", "behavior"));
  b.p = coord_table_from_json(member(j, "p", "behavior"), b.scenario, "behavior.p");
  return b;
}

json prior_to_json(const Prior& p) {
  json rows = json::array();
  for (int x = 0; x < p.num_x; ++x) {
    json row = json::array();
    for (int y = 0; y < p.num_y; ++y) row.push_back(render_scalar(p.at(x, y)));
    rows.push_back(std::move(row));
  }
  return json{{"w", rows}};
}

Prior prior_from_json(const json& j) {
  const json& w = member(j, "w", "prior");
  if (!w.is_array() || w.empty() || !w.at(0).is_array() || w.at(0).empty())
    throw ParseError("prior.w: expected a nonempty 2-d array");
  Prior p;
  p.num_x = static_cast<int>(w.size());
  p.num_y = static_cast<int>(w.at(0).size());
  p.w = matrix_from_json(w, p.num_x, p.num_y, "prior.w");
  return p;
}

json strategic_game_to_json(const StrategicGame& g) {
  json out{{"rows", g.rows},
           {"cols", g.cols},
           {"payoff_a", matrix_to_json(g.payoff_a, g.rows, g.cols)}};
  if (!g.common()) out["payoff_b"] = matrix_to_json(g.payoff_b, g.rows, g.cols);
  return out;
}

StrategicGame strategic_game_from_json(const json& j) {
  StrategicGame g;
  const json& r = member(j, "rows", "strategic game");
  const json& c = member(j, "cols", "strategic game");
  if (!r.is_number_integer() || !c.is_number_integer() || r.get<int>() < 1 || c.get<int>() < 1)
    throw ParseError("strategic game: rows/cols must be positive integers");
  g.rows = r.get<int>();
  g.cols = c.get<int>();
  g.payoff_a = matrix_from_json(member(j, "payoff_a", "strategic game"), g.rows, g.cols,
                                "strategic_game.payoff_a");
  if (j.contains("payoff_b"))
    g.payoff_b = matrix_from_json(j.at("payoff_b"), g.rows, g.cols, "strategic_game.payoff_b");
  return g;
}

DocKind detect_document(const json& j) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (j.contains("p") && j.contains("scenario")) return DocKind::behavior;
  if (j.contains("payoff_a") && j.contains("scenario")) return DocKind::game;
  if (j.contains("payoff_a") && j.contains("rows")) return DocKind::strategic_game;
  if (j.contains("w")) return DocKind::prior;
  if (j.contains("alice_actions")) return DocKind::scenario;
  throw ParseError("document: not a scenario/game/behavior/prior/strategic game");
}

}  // namespace nlgames
