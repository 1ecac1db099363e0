#include "chartmodal/state_diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chartmodal {

namespace {

constexpr const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                    "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int StateDiagram::weight(const std::string& from, const std::string& to, const std::string& question) const {
  for (const auto& e : edges) {
    if (e.from == from && e.to == to && e.question == question) return e.weight;
  }
  return 0;
}

std::string StateDiagram::to_dot() const {
  std::vector<std::string> questions;
  for (const auto& e : edges) {
    if (std::find(questions.begin(), questions.end(), e.question) == questions.end()) {
      questions.push_back(e.question);
    }
  }
  std::ostringstream os;
  os << "digraph modality_states {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (const auto& n : nodes) os << "  " << quoted(n) << ";\n";
  for (const auto& e : edges) {
    const auto q = std::find(questions.begin(), questions.end(), e.question) - questions.begin();
    os << "  " << quoted(e.from) << " -> " << quoted(e.to) << " [label=" << quoted(std::to_string(e.weight))
       << ", weight=" << e.weight << ", penwidth=" << e.weight
       << ", color=" << quoted(kPalette[q % std::size(kPalette)]) << ", tooltip=" << quoted(e.question)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

StateDiagram aggregate_state_diagram(std::span<const std::vector<LogEvent>> logs,
                                     std::span<const std::string> questions) {
  StateDiagram d;
  auto add_node = [&](const std::string& n) {
    if (std::find(d.nodes.begin(), d.nodes.end(), n) == d.nodes.end()) d.nodes.push_back(n);
  };
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const std::string question = i < questions.size() ? questions[i] : "all";
    std::string current = "Start";
    add_node(current);
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& ev : logs[i]) {
      if (ev.state == current) continue;
      add_node(ev.state);
      if (seen.insert({current, ev.state}).second) {
        auto it = std::find_if(d.edges.begin(), d.edges.end(), [&](const DiagramEdge& e) {
          return e.from == current && e.to == ev.state && e.question == question;
        });
        if (it == d.edges.end()) {
          d.edges.push_back({current, ev.state, question, 1});
        } else {
          ++it->weight;
        }
      }
      current = ev.state;
    }
  }
  return d;
}

}  // namespace chartmodal
