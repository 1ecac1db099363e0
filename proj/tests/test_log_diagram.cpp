#include <doctest.h>

#include <json.hpp>

#include "chartmodal/effect_json.hpp"
#include "chartmodal/error.hpp"
#include "chartmodal/session_log.hpp"
#include "chartmodal/state_diagram.hpp"
#include "support.hpp"

using namespace chartmodal;

namespace {

std::vector<LogEvent> sample_log() { return {{0, "B", "TB"}, {400, "R", "TBR"}, {900, "R", "TB"}}; }

}  // namespace

TEST_CASE("log json round trip") {
  testsupport::Rng rng(61);
  const auto spec = testsupport::load_fixture("gdp_heat.json");
  const auto log = testsupport::random_session_log(spec, rng, 200, nullptr);
  CHECK(log_from_json(log_to_json(log)) == log);
  const auto doc = nlohmann::json::parse(log_to_json(sample_log()));
  CHECK(doc[1] == nlohmann::json({{"t_ms", 400}, {"key", "R"}, {"state", "TBR"}}));
}

TEST_CASE("log parsing errors") {
  CHECK_THROWS_AS(log_from_json("not json"), MalformedDocument);
  CHECK_THROWS_AS(log_from_json("{}"), SchemaViolation);
  try {
    log_from_json(R"([{"t_ms":0,"key":"T","state":"T"},{"t_ms":"x","key":"B","state":"TB"}])");
    FAIL("expected SchemaViolation");
  } catch (const SchemaViolation& e) {
    CHECK(e.path() == "[1].t_ms");
  }
}

TEST_CASE("one sample log gives three unit edges") {
  const std::vector<std::vector<LogEvent>> logs = {sample_log()};
  const auto d = aggregate_state_diagram(logs, std::vector<std::string>{"q1"});
  CHECK(d.nodes == std::vector<std::string>{"Start", "TB", "TBR"});
  REQUIRE(d.edges.size() == 3);
  CHECK(d.weight("Start", "TB", "q1") == 1);
  CHECK(d.weight("TB", "TBR", "q1") == 1);
  CHECK(d.weight("TBR", "TB", "q1") == 1);
}

TEST_CASE("duplicate logs double the weights and questions stay separate") {
  const std::vector<std::vector<LogEvent>> logs = {sample_log(), sample_log(), sample_log()};
  const auto d = aggregate_state_diagram(logs, std::vector<std::string>{"q1", "q1", "q2"});
  CHECK(d.edges.size() == 6);
  CHECK(d.weight("Start", "TB", "q1") == 2);
  CHECK(d.weight("TBR", "TB", "q1") == 2);
  CHECK(d.weight("Start", "TB", "q2") == 1);
  const auto dot = d.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"TB\" -> \"TBR\" [label=\"2\", weight=2, penwidth=2") != std::string::npos);
  CHECK(dot.find("tooltip=\"q2\"") != std::string::npos);
}

TEST_CASE("diagram edge cases") {
  CHECK(aggregate_state_diagram({}, {}).nodes.empty());
  // Repeated states collapse; a transition repeated in one log counts once.
  const std::vector<std::vector<LogEvent>> logs = {
      {{0, "T", "T"}, {1, "ArrowRight", "T"}, {2, "B", "TB"}, {3, "B", "T"}, {4, "B", "TB"}}};
  const auto d = aggregate_state_diagram(logs, {});
  CHECK(d.weight("Start", "T", "all") == 1);
  CHECK(d.weight("T", "TB", "all") == 1);
  CHECK(d.weight("TB", "T", "all") == 1);
  CHECK(d.edges.size() == 3);
}

TEST_CASE("effect trace document") {
  auto s = new_session(testsupport::load_fixture("diamonds_bar.json"));
  std::vector<TraceStep> trace;
  for (const char* k : {"B", "ArrowLeft", "S"}) {
    auto fx = handle_key(s, parse_key(k), static_cast<std::int64_t>(trace.size()) * 10);
    trace.push_back({s.log.back(), fx});
  }
  const auto doc = nlohmann::json::parse(trace_to_json(trace));
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["state"] == "B");
  CHECK(doc[0]["effects"][0] == nlohmann::json({{"type", "speak"}, {"text", "Braille on"}}));
  CHECK(doc[0]["effects"][1]["type"] == "show_braille");
  CHECK(doc[0]["effects"][1]["lines"][0] == "⣀⣀⠒⠒⠉");
  CHECK(doc[0]["effects"][1]["cursor_cell"] == 0);
  CHECK(doc[1]["effects"][0]["type"] == "boundary_cue");
  const auto& tones = doc[2]["effects"].back();
  CHECK(tones["type"] == "play_tones");
  CHECK(tones["cursor"] == "0");
  CHECK(tones["events"][0]["timbre"] == "single");
  CHECK(tones["events"][0]["pan"] == -1.0);
}
