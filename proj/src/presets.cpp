#include "nlgames/presets.hpp"

#include <stdexcept>

namespace nlgames {
namespace {

Rational rat(long num, long den) { return Rational(num, den); }

// a+b equals x*y mod 2: the winning predicate of the CHSH game and the
// support of the PR box.
bool chsh_hit(int x, int y, int a, int b) { return ((a + b) & 1) == (x & y); }

Game chsh_game() {
  Scenario sc = chsh_scenario();
  Game game{sc, std::vector<QuadExt>(sc.coords()), {}};
  for (int i = 0; i < sc.coords(); ++i) {
    auto [x, y, a, b] = sc.decode(i);
    game.payoff_a[i] = chsh_hit(x, y, a, b) ? QuadExt(1) : QuadExt(-1);
  }
  return game;
}

Game vb_game(const QuadExt& c) {
  if (c.sign() <= 0) throw std::invalid_argument("vb_game: the stake c must be positive");
  Scenario sc = vb_scenario();
  Game game{sc, std::vector<QuadExt>(sc.coords(), QuadExt(0)), {}};
  const QuadExt half_c = c / QuadExt(2);
  auto set = [&](int x, int y, int a, int b, QuadExt v) {
    game.payoff_a[sc.index(x, y, a, b)] = std::move(v);
  };
  set(0, 0, 0, 1, -half_c);
  set(0, 0, 1, 0, -half_c);
  set(0, 1, 0, 0, half_c);
  set(0, 1, 0, 1, -half_c);
  set(1, 0, 0, 0, half_c);
  set(1, 0, 1, 0, -half_c);
  set(1, 1, 0, 0, -c);
  for (int y = 0; y < 2; ++y) {
    set(2, y, 0, 0, QuadExt(rat(1, 2)));
    set(2, y, 0, 1, QuadExt(rat(-1, 2)));
    set(2, y, 1, 1, QuadExt(rat(-1, 2), rat(1, 4)));
  }
  set(2, 0, 1, 0, QuadExt(rat(1, 2), rat(1, 4)));
  set(2, 1, 1, 0, QuadExt(rat(-3, 2), rat(1, 4)));
  return game;
}

Behavior pr_box() {
  Scenario sc = chsh_scenario();
  Behavior beh{sc, std::vector<QuadExt>(sc.coords(), QuadExt(0))};
  for (int i = 0; i < sc.coords(); ++i) {
    auto [x, y, a, b] = sc.decode(i);
    if (chsh_hit(x, y, a, b)) beh.p[i] = QuadExt(rat(1, 2));
  }
  return beh;
}

// (sqrt2/2) * PR box + (1 - sqrt2/2) * uniform, entrywise 1/4 +- sqrt2/8.
void fill_quantum_chsh_block(Behavior& beh, int x, int y) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      beh.at(x, y, a, b) = chsh_hit(x, y, a, b) ? QuadExt(rat(1, 4), rat(1, 8))
                                                : QuadExt(rat(1, 4), rat(-1, 8));
}

Behavior chsh_quantum() {
  Behavior beh{chsh_scenario(), std::vector<QuadExt>(chsh_scenario().coords())};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) fill_quantum_chsh_block(beh, x, y);
  return beh;
}

Behavior vb_ns_opt() {
  Scenario sc = vb_scenario();
  Behavior beh{sc, std::vector<QuadExt>(sc.coords(), QuadExt(0))};
  const QuadExt half(rat(1, 2));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      if (x == 1 && y == 1) {
        beh.at(x, y, 0, 1) = half;
        beh.at(x, y, 1, 0) = half;
      } else {
        beh.at(x, y, 0, 0) = half;
        beh.at(x, y, 1, 1) = half;
      }
    }
  for (int y = 0; y < 2; ++y) {
    beh.at(2, y, 0, 0) = half;
    beh.at(2, y, 2, 1) = half;
  }
  return beh;
}

Behavior vb_quantum() {
  Scenario sc = vb_scenario();
  Behavior beh{sc, std::vector<QuadExt>(sc.coords(), QuadExt(0))};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) fill_quantum_chsh_block(beh, x, y);
  const char* x2[2][3][2] = {
      {{"0.30602", "0.12925"}, {"0.18243", "0.11444"}, {"0.01155", "0.25630"}},
      {{"0.41652", "0.01875"}, {"0.00395", "0.29293"}, {"0.07953", "0.18832"}},
  };
  for (int y = 0; y < 2; ++y)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 2; ++b) beh.at(2, y, a, b) = parse_scalar(x2[y][a][b]);
  return beh;
}

}  // namespace

Scenario chsh_scenario() { return Scenario({2, 2}, {2, 2}); }

Scenario vb_scenario() { return Scenario({2, 2, 3}, {2, 2}); }

PresetKind preset_kind(const std::string& name) {
  if (name == "battle_of_sexes" || name == "coordination") return PresetKind::strategic_game;
  if (name == "chsh_game" || name == "vb_game") return PresetKind::game;
  if (name == "pr_box" || name == "chsh_quantum" || name == "vb_local_opt" ||
      name == "vb_ns_opt" || name == "vb_quantum")
    return PresetKind::behavior;
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"battle_of_sexes", "coordination", "chsh_game",   "vb_game",   "pr_box",
          "chsh_quantum",    "vb_local_opt", "vb_ns_opt",   "vb_quantum"};
}

StrategicGame preset_strategic_game(const std::string& name) {
  if (name == "battle_of_sexes") {
    StrategicGame game{2, 2, {}, {}};
    game.payoff_a = {QuadExt(2), QuadExt(0), QuadExt(0), QuadExt(1)};
    game.payoff_b = {QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(2)};
    return game;
  }
  if (name == "coordination") {
    StrategicGame game{2, 2, {}, {}};
    game.payoff_a = {QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)};
    return game;
  }
  throw std::invalid_argument("unknown strategic-game preset: " + name);
}

Game preset_game(const std::string& name, const std::optional<QuadExt>& c) {
  if (name == "chsh_game") return chsh_game();
  if (name == "vb_game") {
    if (!c) throw std::invalid_argument("vb_game: the stake parameter c is required");
    return vb_game(*c);
  }
  throw std::invalid_argument("unknown game preset: " + name);
}

Behavior preset_behavior(const std::string& name) {
  if (name == "pr_box") return pr_box();
  if (name == "chsh_quantum") return chsh_quantum();
  if (name == "vb_local_opt") return deterministic_behavior(vb_scenario(), {0, 0, 0}, {0, 0});
  if (name == "vb_ns_opt") return vb_ns_opt();
  if (name == "vb_quantum") return vb_quantum();
  throw std::invalid_argument("unknown behavior preset: " + name);
}

Prior uniform_prior(const Scenario& scenario) {
  Prior prior{scenario.num_x(), scenario.num_y(), {}};
  QuadExt w = QuadExt(1) / QuadExt(static_cast<long>(scenario.num_x()) * scenario.num_y());
  prior.w.assign(static_cast<size_t>(scenario.num_x()) * scenario.num_y(), w);
  return prior;
}

Prior unit_prior(const Scenario& scenario) {
  Prior prior{scenario.num_x(), scenario.num_y(), {}};
  prior.w.assign(static_cast<size_t>(scenario.num_x()) * scenario.num_y(), QuadExt(1));
  return prior;
}

Prior canonical_prior(const std::string& preset_name, const Scenario& scenario) {
  if (preset_name.rfind("vb_", 0) == 0) return unit_prior(scenario);
  return uniform_prior(scenario);
}

QuadExt preset_tolerance(const std::string& name) {
  if (name == "vb_quantum") return QuadExt(Rational(2, 10000));
  return QuadExt(0);
}

}  // namespace nlgames
