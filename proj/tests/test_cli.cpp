#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/cli.hpp"
#include "nlgames/json_io.hpp"
#include "nlgames/model.hpp"
#include "nlgames/presets.hpp"

using namespace nlgames;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "nlgames_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_text(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string write_doc(const std::string& name, const json& doc) {
  return write_text(name, doc.dump());
}

// Alice's x=0 marginal depends on Bob's type: a clean signaling example.
Behavior signaling_behavior() {
  Behavior beh = deterministic_behavior(chsh_scenario(), {0, 0}, {0, 0});
  beh.at(0, 1, 0, 0) = QuadExt(0);
  beh.at(0, 1, 1, 0) = QuadExt(1);
  return beh;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  RunResult missing = run({"bounds", "--game", "preset:chsh_game"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--prior is required") != std::string::npos);
  CHECK(run({"bounds", "--game", "preset:chsh_game", "--prior", "uniform", "--bogus"}).code == 2);
}

TEST_CASE("bounds prints both polytope optima") {
  RunResult r = run({"bounds", "--game", "preset:chsh_game", "--prior", "uniform"});
  CHECK(r.code == 0);
  CHECK(r.out == "local 1/2\nno-signaling 1\n");
  CHECK(r.err.empty());

  RunResult scaled = run({"bounds", "--game", "preset:chsh_game", "--prior", "uniform",
                          "--rescale4", "--approx", "3"});
  CHECK(scaled.code == 0);
  CHECK(scaled.out == "local 2 (2.000)\nno-signaling 4 (4.000)\n");
}

TEST_CASE("bounds --json carries machine-checkable witnesses") {
  RunResult r = run({"bounds", "--game", "preset:chsh_game", "--prior", "uniform", "--json"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("rescale4") == false);
  CHECK(doc.at("local").at("value") == "1/2");
  CHECK(doc.at("local").at("alice_map") == std::vector<int>{0, 0});
  CHECK(doc.at("local").at("bob_map") == std::vector<int>{0, 0});
  CHECK(doc.at("local").at("attained_at_vertex") == true);
  CHECK(doc.at("no_signaling").at("value") == "1");
  CHECK(doc.at("no_signaling").at("attained_at_vertex") == true);

  // the emitted witness is a genuine behavior attaining the bound
  Behavior witness = behavior_from_json(doc.at("no_signaling").at("witness"));
  CHECK(validate_behavior(witness).valid());
  Game chsh = preset_game("chsh_game");
  CHECK(expected_payoff(chsh, witness, uniform_prior(chsh.scenario)).value_a == QuadExt(1));
}

TEST_CASE("payoff prints both players with optional decimals") {
  RunResult r = run({"payoff", "--game", "preset:chsh_game", "--behavior", "preset:chsh_quantum",
                     "--prior", "uniform", "--approx", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "value_a 0+1/2*sqrt2 (0.70711)\nvalue_b 0+1/2*sqrt2 (0.70711)\n");

  RunResult j = run({"payoff", "--game", "preset:chsh_game", "--behavior", "preset:chsh_quantum",
                     "--prior", "uniform", "--json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc.at("value_a") == "0+1/2*sqrt2");
  CHECK(doc.at("value_b") == "0+1/2*sqrt2");
}

TEST_CASE("validate separates clean, tolerated and broken tables") {
  RunResult ok = run({"validate", "--behavior", "preset:pr_box"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("nonneg_normalized pass") != std::string::npos);
  CHECK(ok.out.find("alice_no_signaling pass") != std::string::npos);
  CHECK(ok.out.find("bob_no_signaling pass") != std::string::npos);
  CHECK(ok.out.find("valid\n") != std::string::npos);

  RunResult strict = run({"validate", "--behavior", "preset:vb_quantum"});
  CHECK(strict.code == 1);
  CHECK(strict.out.find("issue: block (2,0) sum - 1 = -1/100000") != std::string::npos);
  CHECK(strict.out.find("invalid\n") != std::string::npos);

  RunResult eased = run({"validate", "--behavior", "preset:vb_quantum", "--tolerance", "2/10000"});
  CHECK(eased.code == 0);

  // a game document works as the scenario reference
  RunResult match = run({"validate", "--behavior", "preset:pr_box", "--scenario",
                         "preset:chsh_game"});
  CHECK(match.code == 0);
  RunResult mismatch = run({"validate", "--behavior", "preset:pr_box", "--scenario",
                            "preset:vb_game:c=2"});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.out.find("scenario mismatch") != std::string::npos);
}

TEST_CASE("check reports the blockwise and averaged verdicts") {
  RunResult pr = run({"check", "--game", "preset:chsh_game", "--behavior", "preset:pr_box",
                      "--prior", "uniform"});
  CHECK(pr.code == 0);
  CHECK(pr.out ==
        "block (0,0) pass\n"
        "block (0,1) pass\n"
        "block (1,0) pass\n"
        "block (1,1) pass\n"
        "ex post pass\n"
        "ex ante pass\n");

  RunResult split = run({"check", "--game", "preset:vb_game:c=2", "--behavior",
                         "preset:vb_ns_opt", "--prior", "unit"});
  CHECK(split.code == 1);
  CHECK(split.out ==
        "block (0,0) pass\n"
        "block (0,1) pass\n"
        "block (1,0) pass\n"
        "block (1,1) pass\n"
        "block (2,0) fail\n"
        "  alice 0->1 margin 0-1/8*sqrt2\n"
        "block (2,1) pass\n"
        "ex post fail\n"
        "ex ante pass\n");
}

TEST_CASE("check modes and their prior requirement") {
  RunResult expost = run({"check", "--game", "preset:chsh_game", "--behavior", "preset:pr_box",
                          "--mode", "expost"});
  CHECK(expost.code == 0);
  CHECK(expost.out.find("ex post pass") != std::string::npos);
  CHECK(expost.out.find("ex ante") == std::string::npos);

  RunResult exante = run({"check", "--game", "preset:chsh_game", "--behavior", "preset:pr_box",
                          "--mode", "exante"});
  CHECK(exante.code == 2);
  CHECK(exante.err.find("--prior is required for the ex ante check") != std::string::npos);

  CHECK(run({"check", "--game", "preset:chsh_game", "--behavior", "preset:pr_box", "--prior",
             "uniform", "--mode", "sideways"})
            .code == 2);
}

TEST_CASE("check on the measured box lists every unstable block") {
  RunResult r = run({"check", "--game", "preset:vb_game:c=4", "--behavior", "preset:vb_quantum",
                     "--prior", "unit", "--tolerance", "1/1000"});
  CHECK(r.code == 1);
  for (const char* line : {"block (0,0) pass", "block (0,1) fail", "block (1,0) fail",
                           "block (1,1) fail", "block (2,0) fail", "block (2,1) fail"})
    CHECK(r.out.find(line) != std::string::npos);
  CHECK(r.out.find("bob 1->0 margin -1+1/2*sqrt2") != std::string::npos);
  CHECK(r.out.find("alice 0->1 margin 0-43527/400000*sqrt2") != std::string::npos);
  CHECK(r.out.find("bob 1->0 margin -24369/100000") != std::string::npos);
  CHECK(r.out.find("alice 1->2 margin -15239/100000+3711/50000*sqrt2") != std::string::npos);
  CHECK(r.out.find("ex post fail\nex ante pass\n") != std::string::npos);
}

TEST_CASE("check --json mirrors the text verdicts structurally") {
  RunResult r = run({"check", "--game", "preset:vb_game:c=2", "--behavior", "preset:vb_ns_opt",
                     "--prior", "unit", "--json"});
  REQUIRE(r.code == 1);
  json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "fail");
  CHECK(doc.at("ex_post").at("verdict") == "fail");
  CHECK(doc.at("ex_ante").at("verdict") == "pass");
  const json& blocks = doc.at("ex_post").at("blocks");
  REQUIRE(blocks.size() == 6);
  const json& bad = blocks.at(4);
  CHECK(bad.at("x") == 2);
  CHECK(bad.at("y") == 0);
  CHECK(bad.at("verdict") == "fail");
  REQUIRE(bad.at("violations").size() == 1);
  const json& v = bad.at("violations").at(0);
  CHECK(v.at("player") == "alice");
  CHECK(v.at("from") == 0);
  CHECK(v.at("to") == 1);
  CHECK(v.at("margin") == "0-1/8*sqrt2");
  CHECK(v.at("type").is_null());
}

TEST_CASE("vertices counts and enumerates, and refuses oversized scenarios") {
  // a behavior document embeds its scenario, so it works as the reference
  RunResult r = run({"vertices", "--scenario", "preset:pr_box"});
  CHECK(r.code == 0);
  CHECK(r.out == "24 vertices: 16 local, 8 nonlocal\n");

  std::string scenario_file =
      write_doc("chsh_scenario.json", scenario_to_json(chsh_scenario()));
  RunResult from_file = run({"vertices", "--scenario", scenario_file, "--json"});
  REQUIRE(from_file.code == 0);
  json doc = json::parse(from_file.out);
  CHECK(doc.at("count") == 24);
  CHECK(doc.at("local") == 16);
  CHECK(doc.at("nonlocal") == 8);
  REQUIRE(doc.at("vertices").size() == 24);
  int local_seen = 0;
  for (const json& v : doc.at("vertices")) {
    CHECK(validate_behavior(behavior_from_json(v)).valid());
    if (v.at("class") == "local") ++local_seen;
  }
  CHECK(local_seen == 16);

  RunResult too_big = run({"vertices", "--scenario", scenario_file, "--max-coords", "8"});
  CHECK(too_big.code == 3);
  CHECK(too_big.err.find("over the configured ceiling") != std::string::npos);
}

TEST_CASE("classify names the tier and certifies local tables") {
  RunResult pr = run({"classify", "--behavior", "preset:pr_box"});
  CHECK(pr.code == 0);
  CHECK(pr.out == "nonlocal_ns\n");

  RunResult det = run({"classify", "--behavior", "preset:vb_local_opt", "--json"});
  REQUIRE(det.code == 0);
  json doc = json::parse(det.out);
  CHECK(doc.at("class") == "local");
  const json& weights = doc.at("weights");
  REQUIRE(weights.size() == 48);  // strategy count of the three-type scenario
  CHECK(weights.at(0) == "1");
  for (size_t k = 1; k < weights.size(); ++k) CHECK(weights.at(k) == "0");

  std::string leaky = write_doc("signaling.json", behavior_to_json(signaling_behavior()));
  RunResult sig = run({"classify", "--behavior", leaky});
  CHECK(sig.code == 1);
  CHECK(sig.out == "signaling\n");
}

TEST_CASE("synthesize rebuilds the parity game from the extreme box") {
  RunResult r = run({"synthesize", "--behavior", "preset:pr_box"});
  REQUIRE(r.code == 0);
  const std::string head = "status ok\ngap 1/2\n";
  REQUIRE(r.out.rfind(head, 0) == 0);
  Game built = game_from_json(json::parse(r.out.substr(head.size())));
  CHECK(built.payoff_a == preset_game("chsh_game").payoff_a);

  RunResult j = run({"synthesize", "--behavior", "preset:pr_box", "--json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc.at("status") == "ok");
  CHECK(doc.at("gap") == "1/2");

  // a gap demand below the achieved one changes nothing
  RunResult eased = run({"synthesize", "--behavior", "preset:pr_box", "--min-gap", "1/4"});
  CHECK(eased.code == 0);
  CHECK(eased.out.rfind(head, 0) == 0);
}

TEST_CASE("synthesize rejects unusable inputs with a reason") {
  RunResult not_vertex = run({"synthesize", "--behavior", "preset:chsh_quantum"});
  CHECK(not_vertex.code == 1);
  CHECK(not_vertex.out ==
        "status rejected_not_vertex\n"
        "behavior is not an extreme point of the no-signaling polytope\n");

  RunResult local = run({"synthesize", "--behavior", "preset:vb_local_opt"});
  CHECK(local.code == 1);
  CHECK(local.out.rfind("status rejected_local\n", 0) == 0);

  RunResult squeezed = run({"synthesize", "--behavior", "preset:pr_box", "--min-gap", "10"});
  CHECK(squeezed.code == 1);
  CHECK(squeezed.out ==
        "status lp_infeasible\n"
        "constraint system infeasible (phase-one residual 144)\n");
}

TEST_CASE("preset emits documents and validates its parameter") {
  RunResult game = run({"preset", "--name", "vb_game", "--c", "2"});
  REQUIRE(game.code == 0);
  json doc = json::parse(game.out);
  REQUIRE(detect_document(doc) == DocKind::game);
  CHECK(game_from_json(doc).payoff_a == preset_game("vb_game", QuadExt(2)).payoff_a);

  RunResult strategic = run({"preset", "--name", "battle_of_sexes"});
  REQUIRE(strategic.code == 0);
  CHECK(detect_document(json::parse(strategic.out)) == DocKind::strategic_game);

  CHECK(run({"preset", "--name", "vb_game"}).code == 2);          // stake required
  CHECK(run({"preset", "--name", "pr_box", "--c", "2"}).code == 2);
  RunResult unknown = run({"preset", "--name", "nonsense"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown preset: nonsense") != std::string::npos);
  RunResult bad_param = run({"payoff", "--game", "preset:vb_game:x=2", "--behavior",
                             "preset:pr_box", "--prior", "unit"});
  CHECK(bad_param.code == 2);
  CHECK(bad_param.err.find("unknown preset parameter") != std::string::npos);
}

TEST_CASE("document loading failures are parse errors") {
  std::string garbage = write_text("garbage.json", "not json here");
  RunResult bad = run({"validate", "--behavior", garbage});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("json: ", 0) == 0);

  RunResult missing = run({"validate", "--behavior", scratch_dir() / "nosuch.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open file") != std::string::npos);

  RunResult wrong_kind = run({"payoff", "--game", "preset:pr_box", "--behavior",
                              "preset:pr_box", "--prior", "uniform"});
  CHECK(wrong_kind.code == 2);
  CHECK(wrong_kind.err.find("expected a game document, got a behavior") != std::string::npos);

  RunResult neg_tol = run({"validate", "--behavior", "preset:pr_box", "--tolerance", "-1/2"});
  CHECK(neg_tol.code == 2);
  CHECK(neg_tol.err.find("tolerance must be nonnegative") != std::string::npos);
  CHECK(run({"validate", "--behavior", "preset:pr_box", "--tolerance", "abc"}).code == 2);
}

TEST_CASE("report renders the bracket table and its JSON twin") {
  RunResult table = run({"report", "--game", "preset:chsh_game", "--prior", "uniform",
                         "--behavior", "quantum=preset:chsh_quantum"});
  CHECK(table.code == 0);
  CHECK(table.out ==
        "name          payoff       ex post  ex ante\n"
        "local         1/2          fail     pass\n"
        "quantum       0+1/2*sqrt2  pass     pass\n"
        "no-signaling  1            pass     pass\n");

  RunResult j = run({"report", "--game", "preset:chsh_game", "--prior", "uniform", "--behavior",
                     "quantum=preset:chsh_quantum", "--rescale4", "--json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc.at("selector") == "alice");
  CHECK(doc.at("rescale4") == true);
  REQUIRE(doc.at("rows").size() == 3);
  CHECK(doc.at("rows").at(0).at("payoff") == "2");
  CHECK(doc.at("rows").at(1).at("payoff") == "0+2*sqrt2");
  CHECK(doc.at("rows").at(1).at("ex_post") == "pass");
  CHECK(doc.at("rows").at(2).at("payoff") == "4");

  // a bare preset reference names its own row
  RunResult bare = run({"report", "--game", "preset:chsh_game", "--prior", "uniform",
                        "--behavior", "preset:chsh_quantum"});
  CHECK(bare.code == 0);
  CHECK(bare.out.find("chsh_quantum") != std::string::npos);
}
