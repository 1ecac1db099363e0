#include "chartmodal/effect_json.hpp"

#include <json.hpp>

namespace chartmodal {

using nlohmann::json;

namespace {

json tone_json(const ToneEvent& e) {
  return {{"freq", e.freq}, {"pan", e.pan}, {"onset", e.onset}, {"dur", e.dur},
          {"timbre", std::string(to_string(e.timbre))}};
}

json effect_json(const Effect& effect) {
  return std::visit(
      [](const auto& e) -> json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Speak>) {
          json j = {{"type", "speak"}, {"text", e.text}};
          if (e.cursor) j["cursor"] = to_string(*e.cursor);
          return j;
        } else if constexpr (std::is_same_v<T, ShowBraille>) {
          json lines = json::array();
          for (const auto& l : e.lines) lines.push_back(l.utf8());
          json j = {{"type", "show_braille"}, {"lines", lines}, {"cursor", to_string(e.cursor)}};
          j["cursor_cell"] = e.cursor_cell ? json(*e.cursor_cell) : json(nullptr);
          return j;
        } else if constexpr (std::is_same_v<T, PlayTones>) {
          json events = json::array();
          for (const auto& t : e.events) events.push_back(tone_json(t));
          return {{"type", "play_tones"}, {"events", events}, {"cursor", to_string(e.cursor)}};
        } else if constexpr (std::is_same_v<T, ShowReview>) {
          return {{"type", "show_review"}, {"text", e.text}, {"cursor", to_string(e.cursor)}};
        } else if constexpr (std::is_same_v<T, HideReview>) {
          return {{"type", "hide_review"}};
        } else if constexpr (std::is_same_v<T, BoundaryCue>) {
          return {{"type", "boundary_cue"}};
        } else if constexpr (std::is_same_v<T, OpenHelp>) {
          return {{"type", "open_help"}};
        } else {
          return {{"type", "close_help"}};
        }
      },
      effect);
}

}  // namespace

std::string trace_to_json(std::span<const TraceStep> trace) {
  json arr = json::array();
  for (const auto& step : trace) {
    json effects = json::array();
    for (const auto& e : step.effects) effects.push_back(effect_json(e));
    arr.push_back({{"t_ms", step.event.t_ms},
                   {"key", step.event.key},
                   {"state", step.event.state},
                   {"effects", effects}});
  }
  return arr.dump(1);
}

std::string tones_to_json(std::span<const ToneEvent> events) {
  json arr = json::array();
  for (const auto& e : events) arr.push_back(tone_json(e));
  return arr.dump(1);
}

}  // namespace chartmodal
