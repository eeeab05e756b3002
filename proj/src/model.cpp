#include "nlgames/model.hpp"

#include <stdexcept>

namespace nlgames {

Scenario::Scenario(std::vector<int> alice_actions, std::vector<int> bob_actions)
    : a_(std::move(alice_actions)), b_(std::move(bob_actions)) {
  if (a_.empty() || b_.empty()) throw std::invalid_argument("scenario needs at least one type per player");
  for (int n : a_)
    if (n < 1) throw std::invalid_argument("scenario action counts must be positive");
  for (int n : b_)
    if (n < 1) throw std::invalid_argument("scenario action counts must be positive");
  offset_.reserve(a_.size() * b_.size());
  for (int x = 0; x < num_x(); ++x)
    for (int y = 0; y < num_y(); ++y) {
      offset_.push_back(coords_);
      coords_ += a_[x] * b_[y];
    }
}

int Scenario::index(int x, int y, int a, int b) const {
  if (x < 0 || x >= num_x() || y < 0 || y >= num_y())
    throw std::out_of_range("type index out of range");
  if (a < 0 || a >= a_[x] || b < 0 || b >= b_[y])
    throw std::out_of_range("action index out of range");
  return offset_[static_cast<size_t>(x) * b_.size() + y] + a * b_[y] + b;
}

std::array<int, 4> Scenario::decode(int idx) const {
  if (idx < 0 || idx >= coords_) throw std::out_of_range("coordinate index out of range");
  for (int x = 0; x < num_x(); ++x)
    for (int y = 0; y < num_y(); ++y) {
      int base = offset_[static_cast<size_t>(x) * b_.size() + y];
      int size = a_[x] * b_[y];
      if (idx < base + size) {
        int rel = idx - base;
        return {x, y, rel / b_[y], rel % b_[y]};
      }
    }
  throw std::logic_error("unreachable");
}

StrategicGame block_game(const Game& game, int x, int y) {
  const Scenario& sc = game.scenario;
  StrategicGame out;
  out.rows = sc.actions_a(x);
  out.cols = sc.actions_b(y);
  out.payoff_a.reserve(static_cast<size_t>(out.rows) * out.cols);
  for (int a = 0; a < out.rows; ++a)
    for (int b = 0; b < out.cols; ++b) out.payoff_a.push_back(game.payoff(Player::alice, x, y, a, b));
  if (!game.common()) {
    out.payoff_b.reserve(static_cast<size_t>(out.rows) * out.cols);
    for (int a = 0; a < out.rows; ++a)
      for (int b = 0; b < out.cols; ++b) out.payoff_b.push_back(game.payoff(Player::bob, x, y, a, b));
  }
  return out;
}

JointDistribution block_distribution(const Behavior& behavior, int x, int y) {
  const Scenario& sc = behavior.scenario;
  JointDistribution out;
  out.rows = sc.actions_a(x);
  out.cols = sc.actions_b(y);
  out.p.reserve(static_cast<size_t>(out.rows) * out.cols);
  for (int a = 0; a < out.rows; ++a)
    for (int b = 0; b < out.cols; ++b) out.p.push_back(behavior.at(x, y, a, b));
  return out;
}

std::string ValidationIssue::describe() const {
  switch (kind) {
    case Kind::negative_entry:
      return "negative entry p(" + std::to_string(a) + "," + std::to_string(b) + "|" +
             std::to_string(x) + "," + std::to_string(y) + ") = " + render_scalar(residual);
    case Kind::block_sum:
      return "block (" + std::to_string(x) + "," + std::to_string(y) +
             ") sum - 1 = " + render_scalar(residual);
    case Kind::alice_marginal:
      return "alice marginal x=" + std::to_string(x) + " a=" + std::to_string(a) + ": y=" +
             std::to_string(y) + " vs y=" + std::to_string(y2) + " differ by " +
             render_scalar(residual);
    case Kind::bob_marginal:
      return "bob marginal y=" + std::to_string(y) + " b=" + std::to_string(b) + ": x=" +
             std::to_string(x) + " vs x=" + std::to_string(x2) + " differ by " +
             render_scalar(residual);
  }
  return "";
}

ValidationReport validate_behavior(const Behavior& behavior, const QuadExt& tolerance) {
  if (tolerance.sign() < 0) throw std::invalid_argument("negative tolerance");
  const Scenario& sc = behavior.scenario;
  if (static_cast<int>(behavior.p.size()) != sc.coords())
    throw std::invalid_argument("behavior table size does not match scenario");
  ValidationReport rep;
  rep.nonneg_normalized = true;
  rep.alice_no_signaling = true;
  rep.bob_no_signaling = true;

  for (int x = 0; x < sc.num_x(); ++x)
    for (int y = 0; y < sc.num_y(); ++y) {
      QuadExt sum;
      for (int a = 0; a < sc.actions_a(x); ++a)
        for (int b = 0; b < sc.actions_b(y); ++b) {
          const QuadExt& v = behavior.at(x, y, a, b);
          sum += v;
          if (v < -tolerance) {
            rep.nonneg_normalized = false;
            rep.issues.push_back({ValidationIssue::Kind::negative_entry, x, y, a, b, -1, -1, v});
          }
        }
      QuadExt resid = sum - QuadExt(1);
      if (resid.abs() > tolerance) {
        rep.nonneg_normalized = false;
        rep.issues.push_back({ValidationIssue::Kind::block_sum, x, y, -1, -1, -1, -1, resid});
      }
    }

  for (int x = 0; x < sc.num_x(); ++x)
    for (int a = 0; a < sc.actions_a(x); ++a)
      for (int y = 0; y + 1 < sc.num_y(); ++y) {
        QuadExt m1, m2;
        for (int b = 0; b < sc.actions_b(y); ++b) m1 += behavior.at(x, y, a, b);
        for (int b = 0; b < sc.actions_b(y + 1); ++b) m2 += behavior.at(x, y + 1, a, b);
        QuadExt resid = m1 - m2;
        if (resid.abs() > tolerance) {
          rep.alice_no_signaling = false;
          rep.issues.push_back(
              {ValidationIssue::Kind::alice_marginal, x, y, a, -1, -1, y + 1, resid});
        }
      }

  for (int y = 0; y < sc.num_y(); ++y)
    for (int b = 0; b < sc.actions_b(y); ++b)
      for (int x = 0; x + 1 < sc.num_x(); ++x) {
        QuadExt m1, m2;
        for (int a = 0; a < sc.actions_a(x); ++a) m1 += behavior.at(x, y, a, b);
        for (int a = 0; a < sc.actions_a(x + 1); ++a) m2 += behavior.at(x + 1, y, a, b);
        QuadExt resid = m1 - m2;
        if (resid.abs() > tolerance) {
          rep.bob_no_signaling = false;
          rep.issues.push_back({ValidationIssue::Kind::bob_marginal, x, y, -1, b, x + 1, -1, resid});
        }
      }

  return rep;
}

Behavior deterministic_behavior(const Scenario& scenario, const std::vector<int>& alice_map,
                                const std::vector<int>& bob_map) {
  if (static_cast<int>(alice_map.size()) != scenario.num_x() ||
      static_cast<int>(bob_map.size()) != scenario.num_y())
    throw std::invalid_argument("strategy map length does not match type count");
  for (int x = 0; x < scenario.num_x(); ++x)
    if (alice_map[x] < 0 || alice_map[x] >= scenario.actions_a(x))
      throw std::out_of_range("alice strategy action out of range");
  for (int y = 0; y < scenario.num_y(); ++y)
    if (bob_map[y] < 0 || bob_map[y] >= scenario.actions_b(y))
      throw std::out_of_range("bob strategy action out of range");
  Behavior out{scenario, std::vector<QuadExt>(scenario.coords())};
  for (int x = 0; x < scenario.num_x(); ++x)
    for (int y = 0; y < scenario.num_y(); ++y) out.at(x, y, alice_map[x], bob_map[y]) = QuadExt(1);
  return out;
}

Behavior uniform_behavior(const Scenario& scenario) {
  Behavior out{scenario, std::vector<QuadExt>(scenario.coords())};
  for (int x = 0; x < scenario.num_x(); ++x)
    for (int y = 0; y < scenario.num_y(); ++y) {
      Rational cell(1, static_cast<long>(scenario.actions_a(x)) * scenario.actions_b(y));
      for (int a = 0; a < scenario.actions_a(x); ++a)
        for (int b = 0; b < scenario.actions_b(y); ++b) out.at(x, y, a, b) = QuadExt(cell);
    }
  return out;
}

void require_same_scenario(const Scenario& a, const Scenario& b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": scenario mismatch");
}

void require_prior_shape(const Prior& prior, const Scenario& scenario, const char* where) {
  if (prior.num_x != scenario.num_x() || prior.num_y != scenario.num_y() ||
      static_cast<int>(prior.w.size()) != prior.num_x * prior.num_y)
    throw std::invalid_argument(std::string(where) + ": prior shape does not match scenario");
  bool positive = false;
  for (const QuadExt& v : prior.w) {
    if (v.sign() < 0) throw std::invalid_argument(std::string(where) + ": negative prior weight");
    if (v.sign() > 0) positive = true;
  }
  if (!positive) throw std::invalid_argument(std::string(where) + ": prior has no positive weight");
}

}  // namespace nlgames
