#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "chartmodal/chart_spec.hpp"
#include "chartmodal/cursor.hpp"

namespace chartmodal {

/// Sound texture of a tone.
///  - single: plain sine
///  - double_tone: sine plus its octave (box interquartile stats)
///  - incremental_step: sine entering through a short rising chirp (outliers)
///  - null_beep: fixed quiet low beep marking an empty cell or outlier slot
enum class Timbre { single, double_tone, incremental_step, null_beep };

std::string_view to_string(Timbre t);

struct ToneEvent {
  double freq = 0;   // Hz
  double pan = 0;    // -1 (left) .. +1 (right)
  double onset = 0;  // seconds
  double dur = 0;    // seconds
  Timbre timbre = Timbre::single;

  bool operator==(const ToneEvent&) const = default;
};

inline constexpr double kNullBeepFreq = 150.0;
inline constexpr double kNullBeepDur = 0.060;
inline constexpr double kNullBeepGain = 0.3;

struct AudioSettings {
  double volume = 0.5;
  double fmin = 200.0;
  double fmax = 1000.0;
  double tone_dur = 0.250;        // seconds per tone
  double autoplay_rate_ms = 250;  // milliseconds per autoplay step
  int sample_rate = 44100;

  /// Throws DomainError when a field is out of range.
  void validate() const;

  bool operator==(const AudioSettings&) const = default;
};

/// How a scatter x-group with several y values is voiced.
enum class ScatterMode { separate, combined };

/// Linear pitch map of y over [ylo, yhi] onto [fmin, fmax]; y is clamped and a
/// degenerate range gives the midpoint.
double freq_map(double y, double ylo, double yhi, const AudioSettings& s);

/// Stereo position of `index` among `n` evenly spread slots.
double pan_map(std::size_t index, std::size_t n);

/// Tones voicing the focused position.
std::vector<ToneEvent> tones_for_focus(const ChartSpec& spec, const Cursor& cursor,
                                       ScatterMode scatter_mode, const AudioSettings& s);

/// Every position of an autoplay walk voiced in turn, step k at onset
/// k * autoplay_rate. Throws InvalidDirection for an axis the chart lacks.
std::vector<ToneEvent> autoplay_schedule(const ChartSpec& spec, const Cursor& from, Direction dir,
                                         AutoplayMode mode, ScatterMode scatter_mode,
                                         const AudioSettings& s);

/// End time of the last tone, in seconds.
double schedule_length(const std::vector<ToneEvent>& events);

}  // namespace chartmodal
