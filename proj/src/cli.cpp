#include "nlgames/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "nlgames/analysis.hpp"
#include "nlgames/equilibrium.hpp"
#include "nlgames/json_io.hpp"
#include "nlgames/polytope.hpp"
#include "nlgames/presets.hpp"
#include "nlgames/synthesis.hpp"

namespace nlgames {
namespace {

using nlohmann::json;

struct CommonFlags {
  bool json_out = false;
  std::string tolerance = "0";
  int approx = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json_out, "emit machine-readable JSON");
  cmd->add_option("--tolerance", flags.tolerance, "verdict tolerance (scalar literal)");
  cmd->add_option("--approx", flags.approx, "also show decimals to this many digits")
      ->check(CLI::NonNegativeNumber);
}

QuadExt tolerance_of(const CommonFlags& flags) {
  QuadExt tol = parse_scalar(flags.tolerance);
  if (tol.sign() < 0) throw std::invalid_argument("tolerance must be nonnegative");
  return tol;
}

std::string show(const QuadExt& v, int approx) {
  std::string s = render_scalar(v);
  if (approx > 0) s += " (" + approx_decimal(v, approx) + ")";
  return s;
}

// A document reference is a file path or an inline preset
// "preset:NAME[:c=V]"; priors additionally accept "uniform" and "unit".
json load_ref(const std::string& ref) {
  if (ref.rfind("preset:", 0) == 0) {
    std::string rest = ref.substr(7);
    std::optional<QuadExt> c;
    std::string name = rest;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      name = rest.substr(0, colon);
      std::string param = rest.substr(colon + 1);
      if (param.rfind("c=", 0) != 0)
        throw std::invalid_argument("unknown preset parameter in '" + ref + "'");
      c = parse_scalar(param.substr(2));
    }
    switch (preset_kind(name)) {
      case PresetKind::strategic_game:
        return strategic_game_to_json(preset_strategic_game(name));
      case PresetKind::game:
        return game_to_json(preset_game(name, c));
      case PresetKind::behavior:
        return behavior_to_json(preset_behavior(name));
    }
    throw std::logic_error("unhandled preset kind");
  }
  std::ifstream in(ref);
  if (!in) throw std::invalid_argument("cannot open file: " + ref);
  return json::parse(in);
}

std::string kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::scenario: return "scenario";
    case DocKind::game: return "game";
    case DocKind::behavior: return "behavior";
    case DocKind::prior: return "prior";
    case DocKind::strategic_game: return "strategic game";
  }
  return "document";
}

Game load_game(const std::string& ref) {
  json doc = load_ref(ref);
  if (detect_document(doc) != DocKind::game)
    throw ParseError(ref + ": expected a game document, got a " + kind_name(detect_document(doc)));
  return game_from_json(doc);
}

Behavior load_behavior(const std::string& ref) {
  json doc = load_ref(ref);
  if (detect_document(doc) != DocKind::behavior)
    throw ParseError(ref + ": expected a behavior document, got a " +
                     kind_name(detect_document(doc)));
  return behavior_from_json(doc);
}

// Accepts a scenario document or any document embedding one.
Scenario load_scenario(const std::string& ref) {
  json doc = load_ref(ref);
  switch (detect_document(doc)) {
    case DocKind::scenario:
      return scenario_from_json(doc);
    case DocKind::game:
    case DocKind::behavior:
      return scenario_from_json(doc.at("scenario"));
    default:
      throw ParseError(ref + ": no scenario in a " + kind_name(detect_document(doc)) +
                       " document");
  }
}

Prior resolve_prior(const std::string& ref, const Scenario& scenario) {
  if (ref == "uniform" || ref == "preset:uniform") return uniform_prior(scenario);
  if (ref == "unit" || ref == "preset:unit") return unit_prior(scenario);
  json doc = load_ref(ref);
  if (detect_document(doc) != DocKind::prior)
    throw ParseError(ref + ": expected a prior document, got a " +
                     kind_name(detect_document(doc)));
  Prior prior = prior_from_json(doc);
  require_prior_shape(prior, scenario, "prior");
  return prior;
}

const char* player_name(Player p) { return p == Player::alice ? "alice" : "bob"; }

json margin_to_json(const DeviationMargin& m) {
  json j{{"player", player_name(m.player)},
         {"from", m.from},
         {"to", m.to},
         {"margin", render_scalar(m.margin)}};
  j["type"] = m.type >= 0 ? json(m.type) : json(nullptr);
  return j;
}

json report_to_json(const EquilibriumReport& report) {
  json violations = json::array();
  for (const auto& m : report.violations) violations.push_back(margin_to_json(m));
  return json{{"verdict", report.pass ? "pass" : "fail"}, {"violations", violations}};
}

std::string margin_line(const DeviationMargin& m, int approx) {
  std::string s = player_name(m.player);
  if (m.type >= 0) s += " type " + std::to_string(m.type);
  s += " " + std::to_string(m.from) + "->" + std::to_string(m.to) + " margin " +
       show(m.margin, approx);
  return s;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct ValidateArgs {
  std::string behavior, scenario;
  CommonFlags flags;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  Behavior behavior = load_behavior(args.behavior);
  ValidationReport report = validate_behavior(behavior, tolerance_of(args.flags));
  bool scenario_match = true;
  if (!args.scenario.empty()) scenario_match = load_scenario(args.scenario) == behavior.scenario;
  bool ok = report.valid() && scenario_match;

  if (args.flags.json_out) {
    json issues = json::array();
    for (const auto& issue : report.issues)
      issues.push_back({{"description", issue.describe()},
                        {"residual", render_scalar(issue.residual)}});
    json doc{{"valid", report.valid()},
             {"nonneg_normalized", report.nonneg_normalized},
             {"alice_no_signaling", report.alice_no_signaling},
             {"bob_no_signaling", report.bob_no_signaling},
             {"issues", issues}};
    if (!args.scenario.empty()) doc["scenario_match"] = scenario_match;
    emit(out, doc);
  } else {
    out << "nonneg_normalized " << (report.nonneg_normalized ? "pass" : "fail") << '\n';
    out << "alice_no_signaling " << (report.alice_no_signaling ? "pass" : "fail") << '\n';
    out << "bob_no_signaling " << (report.bob_no_signaling ? "pass" : "fail") << '\n';
    for (const auto& issue : report.issues) out << "issue: " << issue.describe() << '\n';
    if (!args.scenario.empty() && !scenario_match) out << "scenario mismatch\n";
    out << (ok ? "valid" : "invalid") << '\n';
  }
  return ok ? 0 : 1;
}

struct PayoffArgs {
  std::string game, behavior, prior;
  CommonFlags flags;
};

int cmd_payoff(const PayoffArgs& args, std::ostream& out) {
  Game game = load_game(args.game);
  Behavior behavior = load_behavior(args.behavior);
  Prior prior = resolve_prior(args.prior, game.scenario);
  PayoffPair value = expected_payoff(game, behavior, prior);
  if (args.flags.json_out) {
    emit(out, json{{"value_a", render_scalar(value.value_a)},
                   {"value_b", render_scalar(value.value_b)}});
  } else {
    out << "value_a " << show(value.value_a, args.flags.approx) << '\n';
    out << "value_b " << show(value.value_b, args.flags.approx) << '\n';
  }
  return 0;
}

struct BoundsArgs {
  std::string game, prior;
  bool rescale4 = false;
  CommonFlags flags;
};

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
  Game game = load_game(args.game);
  Prior prior = resolve_prior(args.prior, game.scenario);
  BoundResult local = local_bound(game, prior);
  BoundResult ns = ns_bound(game, prior);
  QuadExt scale = args.rescale4 ? QuadExt(4) : QuadExt(1);
  if (args.flags.json_out) {
    json doc{{"rescale4", args.rescale4},
             {"local",
              {{"value", render_scalar(local.value * scale)},
               {"alice_map", local.strategy->alice_map},
               {"bob_map", local.strategy->bob_map},
               {"attained_at_vertex", local.attained_at_vertex}}},
             {"no_signaling",
              {{"value", render_scalar(ns.value * scale)},
               {"attained_at_vertex", ns.attained_at_vertex},
               {"witness", behavior_to_json(ns.witness)}}}};
    emit(out, doc);
  } else {
    out << "local " << show(local.value * scale, args.flags.approx) << '\n';
    out << "no-signaling " << show(ns.value * scale, args.flags.approx) << '\n';
  }
  return 0;
}

struct CheckArgs {
  std::string game, behavior, prior, mode = "both";
  CommonFlags flags;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  if (args.mode != "expost" && args.mode != "exante" && args.mode != "both")
    throw std::invalid_argument("check: --mode must be expost, exante or both");
  const bool want_ex_post = args.mode != "exante";
  const bool want_ex_ante = args.mode != "expost";
  Game game = load_game(args.game);
  Behavior behavior = load_behavior(args.behavior);
  QuadExt tol = tolerance_of(args.flags);

  std::optional<ExPostReport> ex_post;
  if (want_ex_post) ex_post = check_ex_post(game, behavior, tol);

  std::optional<EquilibriumReport> ex_ante;
  if (want_ex_ante) {
    if (args.prior.empty())
      throw std::invalid_argument("check: --prior is required for the ex ante check");
    Prior prior = resolve_prior(args.prior, game.scenario);
    ex_ante = check_ex_ante(game, behavior, prior, tol);
  }
  bool pass = (!ex_post || ex_post->pass) && (!ex_ante || ex_ante->pass);

  if (args.flags.json_out) {
    json doc{{"verdict", pass ? "pass" : "fail"}};
    if (ex_post) {
      json blocks = json::array();
      for (const auto& block : ex_post->blocks) {
        json b = report_to_json(block.report);
        b["x"] = block.x;
        b["y"] = block.y;
        blocks.push_back(std::move(b));
      }
      doc["ex_post"] = json{{"verdict", ex_post->pass ? "pass" : "fail"}, {"blocks", blocks}};
    }
    if (ex_ante) doc["ex_ante"] = report_to_json(*ex_ante);
    emit(out, doc);
  } else {
    if (ex_post) {
      for (const auto& block : ex_post->blocks) {
        out << "block (" << block.x << "," << block.y << ") "
            << (block.report.pass ? "pass" : "fail") << '\n';
        for (const auto& m : block.report.violations)
          out << "  " << margin_line(m, args.flags.approx) << '\n';
      }
      out << "ex post " << (ex_post->pass ? "pass" : "fail") << '\n';
    }
    if (ex_ante) {
      for (const auto& m : ex_ante->violations)
        out << margin_line(m, args.flags.approx) << '\n';
      out << "ex ante " << (ex_ante->pass ? "pass" : "fail") << '\n';
    }
  }
  return pass ? 0 : 1;
}

struct VerticesArgs {
  std::string scenario;
  int max_coords = 32;
  CommonFlags flags;
};

int cmd_vertices(const VerticesArgs& args, std::ostream& out) {
  Scenario scenario = load_scenario(args.scenario);
  EnumerationOptions options;
  options.max_coords = args.max_coords;
  VertexList list = enumerate_ns_vertices(scenario, options);
  if (args.flags.json_out) {
    json vertices = json::array();
    for (size_t i = 0; i < list.vertices.size(); ++i) {
      json v = behavior_to_json(list.vertices[i]);
      v["class"] = list.classification[i] == VertexClass::local ? "local" : "nonlocal";
      vertices.push_back(std::move(v));
    }
    emit(out, json{{"count", list.vertices.size()},
                   {"local", list.local_count()},
                   {"nonlocal", list.nonlocal_count()},
                   {"vertices", vertices}});
  } else {
    out << list.vertices.size() << " vertices: " << list.local_count() << " local, "
        << list.nonlocal_count() << " nonlocal\n";
  }
  return 0;
}

struct ClassifyArgs {
  std::string behavior;
  CommonFlags flags;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  Behavior behavior = load_behavior(args.behavior);
  ClassifyResult result = classify_behavior(behavior, tolerance_of(args.flags));
  const char* name = result.cls == BehaviorClass::signaling ? "signaling"
                     : result.cls == BehaviorClass::local   ? "local"
                                                            : "nonlocal_ns";
  if (args.flags.json_out) {
    json doc{{"class", name}};
    if (result.cls == BehaviorClass::local) {
      json weights = json::array();
      for (const auto& w : result.certificate.weights) weights.push_back(render_scalar(w));
      doc["weights"] = weights;
    }
    emit(out, doc);
  } else {
    out << name << '\n';
  }
  return result.cls == BehaviorClass::signaling ? 1 : 0;
}

struct SynthesizeArgs {
  std::string behavior, prior = "uniform", box = "1", min_gap;
  bool require_ns_opt = false;
  CommonFlags flags;
};

int cmd_synthesize(const SynthesizeArgs& args, std::ostream& out) {
  Behavior vertex = load_behavior(args.behavior);
  SynthesisOptions options;
  options.payoff_box = parse_scalar(args.box);
  options.prior = resolve_prior(args.prior, vertex.scenario);
  options.require_ns_optimum = args.require_ns_opt;
  if (!args.min_gap.empty()) options.minimum_gap = parse_scalar(args.min_gap);
  SynthesisResult result = synthesize_game(vertex, options);

  const char* status = result.status == SynthesisStatus::ok                  ? "ok"
                       : result.status == SynthesisStatus::nonpositive_gap   ? "nonpositive_gap"
                       : result.status == SynthesisStatus::lp_infeasible     ? "lp_infeasible"
                       : result.status == SynthesisStatus::rejected_not_vertex
                           ? "rejected_not_vertex"
                           : "rejected_local";
  if (args.flags.json_out) {
    json doc;
    if (result.status == SynthesisStatus::ok ||
        result.status == SynthesisStatus::nonpositive_gap) {
      doc = game_to_json(result.game);
      doc["gap"] = render_scalar(result.gap);
    }
    doc["status"] = status;
    doc["detail"] = result.detail;
    emit(out, doc);
  } else {
    out << "status " << status << '\n';
    if (result.status == SynthesisStatus::ok ||
        result.status == SynthesisStatus::nonpositive_gap) {
      out << "gap " << show(result.gap, args.flags.approx) << '\n';
      emit(out, game_to_json(result.game));
    } else {
      out << result.detail << '\n';
    }
  }
  return result.ok() ? 0 : 1;
}

struct PresetArgs {
  std::string name, c;
  CommonFlags flags;
};

int cmd_preset(const PresetArgs& args, std::ostream& out) {
  std::optional<QuadExt> c;
  if (!args.c.empty()) c = parse_scalar(args.c);
  switch (preset_kind(args.name)) {
    case PresetKind::strategic_game:
      if (c) throw std::invalid_argument(args.name + ": preset takes no parameter c");
      emit(out, strategic_game_to_json(preset_strategic_game(args.name)));
      return 0;
    case PresetKind::game:
      emit(out, game_to_json(preset_game(args.name, c)));
      return 0;
    case PresetKind::behavior:
      if (c) throw std::invalid_argument(args.name + ": preset takes no parameter c");
      emit(out, behavior_to_json(preset_behavior(args.name)));
      return 0;
  }
  throw std::logic_error("unhandled preset kind");
}

struct ReportArgs {
  std::string game, prior;
  std::vector<std::string> behaviors;
  bool rescale4 = false;
  CommonFlags flags;
};

int cmd_report(const ReportArgs& args, std::ostream& out) {
  Game game = load_game(args.game);
  Prior prior = resolve_prior(args.prior, game.scenario);
  std::vector<NamedBehavior> named;
  for (const std::string& ref : args.behaviors) {
    std::string name = ref, target = ref;
    if (auto eq = ref.find('='); eq != std::string::npos) {
      name = ref.substr(0, eq);
      target = ref.substr(eq + 1);
    } else if (ref.rfind("preset:", 0) == 0) {
      name = ref.substr(7, ref.find(':', 7) - 7);
    }
    named.push_back({name, load_behavior(target)});
  }
  GapReport report = gap_report(game, prior, named, tolerance_of(args.flags));
  if (args.flags.json_out) {
    QuadExt scale = args.rescale4 ? QuadExt(4) : QuadExt(1);
    json rows = json::array();
    for (const GapRow& row : report.rows)
      rows.push_back({{"name", row.name},
                      {"payoff", render_scalar(row.payoff * scale)},
                      {"ex_post", row.ex_post ? "pass" : "fail"},
                      {"ex_ante", row.ex_ante ? "pass" : "fail"}});
    emit(out, json{{"selector", player_name(report.selector)},
                   {"rescale4", args.rescale4},
                   {"rows", rows}});
  } else {
    out << render_gap_report(report, args.rescale4, args.flags.approx);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for Bayesian games played with nonlocal resources", "nlgames"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "structural checks of a behavior table");
  validate->add_option("--behavior", validate_args.behavior, "behavior document")->required();
  validate->add_option("--scenario", validate_args.scenario, "scenario the behavior must match");
  add_common(validate, validate_args.flags);

  PayoffArgs payoff_args;
  CLI::App* payoff = app.add_subcommand("payoff", "expected payoff of a behavior");
  payoff->add_option("--game", payoff_args.game, "game document")->required();
  payoff->add_option("--behavior", payoff_args.behavior, "behavior document")->required();
  payoff->add_option("--prior", payoff_args.prior, "prior document, 'uniform' or 'unit'")
      ->required();
  add_common(payoff, payoff_args.flags);

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand("bounds", "local and no-signaling payoff bounds");
  bounds->add_option("--game", bounds_args.game, "game document")->required();
  bounds->add_option("--prior", bounds_args.prior, "prior document, 'uniform' or 'unit'")
      ->required();
  bounds->add_flag("--rescale4", bounds_args.rescale4, "display bounds multiplied by 4");
  add_common(bounds, bounds_args.flags);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "equilibrium checks of a behavior");
  check->add_option("--game", check_args.game, "game document")->required();
  check->add_option("--behavior", check_args.behavior, "behavior document")->required();
  check->add_option("--mode", check_args.mode, "expost, exante or both (default both)");
  check->add_option("--prior", check_args.prior, "prior document, 'uniform' or 'unit'");
  add_common(check, check_args.flags);

  VerticesArgs vertices_args;
  CLI::App* vertices = app.add_subcommand("vertices", "no-signaling polytope vertex list");
  vertices->add_option("--scenario", vertices_args.scenario, "scenario document")->required();
  vertices->add_option("--max-coords", vertices_args.max_coords,
                       "refuse scenarios with more behavior coordinates (default 32)");
  add_common(vertices, vertices_args.flags);

  ClassifyArgs classify_args;
  CLI::App* classify = app.add_subcommand("classify", "signaling / local / nonlocal_ns");
  classify->add_option("--behavior", classify_args.behavior, "behavior document")->required();
  add_common(classify, classify_args.flags);

  SynthesizeArgs synthesize_args;
  CLI::App* synthesize =
      app.add_subcommand("synthesize", "build a game separating a nonlocal vertex");
  synthesize->add_option("--behavior", synthesize_args.behavior, "vertex behavior document")
      ->required();
  synthesize->add_option("--box", synthesize_args.box, "payoff box bound M (default 1)");
  synthesize->add_option("--prior", synthesize_args.prior,
                         "prior weights for the gap (default uniform)");
  synthesize->add_option("--min-gap", synthesize_args.min_gap, "require at least this gap");
  synthesize->add_flag("--require-ns-opt", synthesize_args.require_ns_opt,
                       "gap against every no-signaling vertex");
  add_common(synthesize, synthesize_args.flags);

  PresetArgs preset_args;
  CLI::App* preset = app.add_subcommand("preset", "emit a built-in document");
  preset->add_option("--name", preset_args.name, "preset name")->required();
  preset->add_option("--c", preset_args.c, "stake parameter for vb_game");
  add_common(preset, preset_args.flags);

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "bounds and verdicts side by side");
  report->add_option("--game", report_args.game, "game document")->required();
  report->add_option("--prior", report_args.prior, "prior document, 'uniform' or 'unit'")
      ->required();
  report->add_option("--behavior", report_args.behaviors,
                     "behavior rows, each 'NAME=REF' or a bare reference");
  report->add_flag("--rescale4", report_args.rescale4, "display payoffs multiplied by 4");
  add_common(report, report_args.flags);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nlgames");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_args, out);
    if (payoff->parsed()) return cmd_payoff(payoff_args, out);
    if (bounds->parsed()) return cmd_bounds(bounds_args, out);
    if (check->parsed()) return cmd_check(check_args, out);
    if (vertices->parsed()) return cmd_vertices(vertices_args, out);
    if (classify->parsed()) return cmd_classify(classify_args, out);
    if (synthesize->parsed()) return cmd_synthesize(synthesize_args, out);
    if (preset->parsed()) return cmd_preset(preset_args, out);
    if (report->parsed()) return cmd_report(report_args, out);
  } catch (const ScenarioTooLarge& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "json: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
  err << "no command\n";
  return 2;
}

}  // namespace nlgames
