#pragma once

#include <string>
#include <string_view>

namespace chartmodal {

/// A normalised key chord. Command (macOS) and Meta map to Control, Option to
/// Alt. Names follow the DOM `key` vocabulary: "ArrowLeft", "Home", "Space",
/// "Period", "PageUp", single upper-case letters, and so on. The pseudo key
/// "Tick" is the autoplay timer firing.
struct Key {
  bool ctrl = false;
  bool alt = false;
  bool shift = false;
  std::string name;

  bool operator==(const Key&) const = default;
};

/// Accepts "Control+Shift+ArrowRight", "cmd+left", "b", ".", "Esc", ...
/// Unknown names pass through unchanged.
Key parse_key(std::string_view text);

/// Canonical text: modifiers in the order Control, Alt, Shift.
std::string to_string(const Key& key);

inline const Key kTick{false, false, false, "Tick"};

}  // namespace chartmodal
