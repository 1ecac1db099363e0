#pragma once

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "chartmodal/navigator.hpp"

namespace chartmodal {

struct DiagramEdge {
  std::string from;
  std::string to;
  std::string question;
  int weight = 0;  // participants (logs) taking this transition

  bool operator==(const DiagramEdge&) const = default;
};

/// Aggregated modality-state transitions over many session logs.
struct StateDiagram {
  std::vector<std::string> nodes;  // first-appearance order
  std::vector<DiagramEdge> edges;  // first-appearance order

  int weight(const std::string& from, const std::string& to, const std::string& question) const;

  /// Graphviz DOT: edge `label` and `weight` carry the participant count,
  /// `penwidth` grows with it, colour distinguishes questions.
  std::string to_dot() const;
};

/// Each log walks Start -> state after each event; repeated states collapse.
/// A transition counts once per log. `questions[i]` labels `logs[i]`; missing
/// labels default to "all".
StateDiagram aggregate_state_diagram(std::span<const std::vector<LogEvent>> logs,
                                     std::span<const std::string> questions);

}  // namespace chartmodal
