#include "chartmodal/keys.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace chartmodal {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

enum class Mod { none, ctrl, alt, shift };

Mod modifier(const std::string& l) {
  if (l == "control" || l == "ctrl" || l == "cmd" || l == "command" || l == "meta") return Mod::ctrl;
  if (l == "alt" || l == "option") return Mod::alt;
  if (l == "shift") return Mod::shift;
  return Mod::none;
}

std::string canonical_name(std::string_view raw) {
  static const std::array<std::pair<std::string_view, std::string_view>, 22> kAliases = {{
      {"left", "ArrowLeft"},     {"arrowleft", "ArrowLeft"},   {"right", "ArrowRight"},
      {"arrowright", "ArrowRight"}, {"up", "ArrowUp"},         {"arrowup", "ArrowUp"},
      {"down", "ArrowDown"},     {"arrowdown", "ArrowDown"},   {"home", "Home"},
      {"end", "End"},            {"space", "Space"},           {"spacebar", "Space"},
      {".", "Period"},           {"period", "Period"},         {",", "Comma"},
      {"comma", "Comma"},        {"pageup", "PageUp"},         {"pagedown", "PageDown"},
      {"esc", "Escape"},         {"escape", "Escape"},         {"tick", "Tick"},
      {"control", "Control"},
  }};
  if (raw == " ") return "Space";
  const std::string l = lower(raw);
  for (const auto& [alias, name] : kAliases) {
    if (l == alias) return std::string(name);
  }
  switch (modifier(l)) {
    case Mod::ctrl:
      return "Control";
    case Mod::alt:
      return "Alt";
    case Mod::shift:
      return "Shift";
    case Mod::none:
      break;
  }
  if (raw.size() == 1 && std::isalpha(static_cast<unsigned char>(raw[0]))) {
    return std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(raw[0]))));
  }
  return std::string(raw);
}

}  // namespace

Key parse_key(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text == "+") {
    parts.push_back(text);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto pos = text.find('+', start);
      if (pos == std::string_view::npos) pos = text.size();
      if (pos > start) parts.push_back(text.substr(start, pos - start));
      start = pos + 1;
    }
  }
  Key key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool last = i + 1 == parts.size();
    const Mod m = modifier(lower(parts[i]));
    if (!last && m != Mod::none) {
      key.ctrl |= m == Mod::ctrl;
      key.alt |= m == Mod::alt;
      key.shift |= m == Mod::shift;
    } else if (last) {
      key.name = canonical_name(parts[i]);
    }
  }
  return key;
}

std::string to_string(const Key& key) {
  std::string out;
  if (key.ctrl) out += "Control+";
  if (key.alt) out += "Alt+";
  if (key.shift) out += "Shift+";
  return out + key.name;
}

}  // namespace chartmodal
