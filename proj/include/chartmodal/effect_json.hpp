#pragma once

#include <span>
#include <string>
#include <vector>

#include "chartmodal/navigator.hpp"

namespace chartmodal {

/// One key event and the effects it produced.
struct TraceStep {
  LogEvent event;
  std::vector<Effect> effects;
};

/// Effect traces are the golden files a frontend's conformance harness diffs
/// against. Shape:
///   [{"t_ms":0,"key":"B","state":"B","effects":[{"type":"speak",...}, ...]}, ...]
std::string trace_to_json(std::span<const TraceStep> trace);

/// Tone events as a JSON array of {freq, pan, onset, dur, timbre}.
std::string tones_to_json(std::span<const ToneEvent> events);

}  // namespace chartmodal
