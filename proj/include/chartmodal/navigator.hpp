#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chartmodal/braille.hpp"
#include "chartmodal/chart_spec.hpp"
#include "chartmodal/cursor.hpp"
#include "chartmodal/keys.hpp"
#include "chartmodal/sonify.hpp"
#include "chartmodal/text.hpp"

namespace chartmodal {

// ---------------------------------------------------------------------------
// Effects: inert output commands. A frontend executes them in order.
// ---------------------------------------------------------------------------

struct Speak {
  std::string text;
  std::optional<Cursor> cursor;  // unset for announcements
  bool operator==(const Speak&) const = default;
};

struct ShowBraille {
  std::vector<BrailleLine> lines;        // already wrapped to the display width
  std::optional<std::size_t> cursor_cell;  // index into the concatenated lines
  Cursor cursor;
  bool operator==(const ShowBraille&) const = default;
};

struct PlayTones {
  std::vector<ToneEvent> events;
  Cursor cursor;
  bool operator==(const PlayTones&) const = default;
};

struct ShowReview {
  std::string text;
  Cursor cursor;
  bool operator==(const ShowReview&) const = default;
};

struct HideReview {
  bool operator==(const HideReview&) const = default;
};
struct BoundaryCue {
  bool operator==(const BoundaryCue&) const = default;
};
struct OpenHelp {
  bool operator==(const OpenHelp&) const = default;
};
struct CloseHelp {
  bool operator==(const CloseHelp&) const = default;
};

using Effect =
    std::variant<Speak, ShowBraille, PlayTones, ShowReview, HideReview, BoundaryCue, OpenHelp, CloseHelp>;

/// The cursor an effect refers to, if it refers to one.
std::optional<Cursor> effect_cursor(const Effect& effect);

// ---------------------------------------------------------------------------
// Session state
// ---------------------------------------------------------------------------

/// Sonification toggle. Bar, heat and box charts use off/on; scatter charts
/// cycle off -> separate -> combined -> off.
enum class SoundState { off, on, separate, combined };

std::string_view to_string(SoundState s);

struct Modalities {
  bool braille = false;
  Verbosity text = Verbosity::off;
  SoundState sound = SoundState::off;
  bool review = false;

  bool operator==(const Modalities&) const = default;
};

/// Compact label of the active modalities in the fixed order S, T, B, R
/// ("TB", "TBR", "ST"); "Start" when none is active.
std::string modality_string(const Modalities& m);

/// Settings adjustable from the help dialog, in dialog order.
enum class HelpField { volume, braille_columns, autoplay_rate, fmin, fmax };

struct SessionSettings {
  AudioSettings audio;
  std::size_t braille_columns = 40;

  bool operator==(const SessionSettings&) const = default;
};

inline constexpr double kMinAutoplayRateMs = 20;
inline constexpr double kMaxAutoplayRateMs = 2000;
inline constexpr double kAutoplayRateFactor = 1.25;

struct AutoplayState {
  Direction direction = Direction::right;
  AutoplayMode mode = AutoplayMode::outward;
  std::vector<Cursor> walk;
  std::size_t next = 0;  // index in `walk` of the position the next Tick visits

  bool operator==(const AutoplayState&) const = default;
};

struct LogEvent {
  std::int64_t t_ms = 0;
  std::string key;
  std::string state;

  bool operator==(const LogEvent&) const = default;
};

struct SessionState {
  ChartSpec spec;
  std::vector<XGroup> scatter_groups;  // cached x-groups of scatter points
  Cursor cursor;
  Modalities modalities;
  SessionSettings settings;
  NavAxis last_axis = NavAxis::horizontal;
  std::optional<AutoplayState> autoplay;
  bool help_open = false;
  HelpField help_field = HelpField::volume;
  std::vector<LogEvent> log;

  bool operator==(const SessionState&) const = default;
};

/// Fresh session: cursor on the first data position, every modality off,
/// empty log.
SessionState new_session(ChartSpec spec, SessionSettings settings = {});

/// Applies one key event at `t_ms` (clamped to be non-decreasing), appends it
/// to the log and returns the effects to execute. Unknown keys are logged and
/// otherwise ignored; moves past a boundary leave the cursor in place and
/// yield BoundaryCue.
std::vector<Effect> handle_key(SessionState& state, const Key& key, std::int64_t t_ms);

/// The tethered outputs for the current focus: what Space re-emits.
std::vector<Effect> focal_effects(const SessionState& state);

/// Braille for the focused chart region (whole chart, or the focused box
/// group), unwrapped, with the line position of the cursor.
struct FocusBraille {
  BrailleLine line;
  std::size_t position = 0;
};
std::optional<FocusBraille> focus_braille(const SessionState& state);

/// Re-runs a recorded log. Throws ReplayMismatch when a record's state label
/// disagrees with the recomputed session, or timestamps go backwards.
SessionState replay(const ChartSpec& spec, std::span<const LogEvent> log, SessionSettings settings = {});

}  // namespace chartmodal
