#pragma once

// Per-sample voice definitions shared by the serial and OpenMP mixers. Both
// translation units must evaluate exactly these expressions in the same order
// for their outputs to match bit for bit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "chartmodal/render.hpp"

namespace chartmodal::detail {

inline constexpr double kRampSeconds = 0.010;
inline constexpr double kChirpSeconds = 0.020;
inline constexpr double kChirpStartRatio = 0.5;

struct Voice {
  std::int64_t start = 0;   // first frame
  std::int64_t frames = 0;  // length
  std::int64_t ramp = 0;    // attack/release length in frames
  double gain_l = 0;
  double gain_r = 0;
  ToneEvent event;
};

inline Voice make_voice(const ToneEvent& ev, const AudioSettings& s) {
  const double sr = s.sample_rate;
  Voice v;
  v.event = ev;
  v.start = std::llround(ev.onset * sr);
  v.frames = std::max<std::int64_t>(0, std::llround(ev.dur * sr));
  v.ramp = std::min<std::int64_t>(std::llround(kRampSeconds * sr), v.frames / 2);
  const double theta = (std::clamp(ev.pan, -1.0, 1.0) + 1.0) * std::numbers::pi / 4.0;
  const double amp = ev.timbre == Timbre::null_beep ? s.volume * kNullBeepGain : s.volume;
  v.gain_l = amp * std::cos(theta);
  v.gain_r = amp * std::sin(theta);
  return v;
}

inline std::vector<Voice> make_voices(std::span<const ToneEvent> events, const AudioSettings& s) {
  std::vector<Voice> voices;
  voices.reserve(events.size());
  for (const auto& ev : events) voices.push_back(make_voice(ev, s));
  return voices;
}

inline std::int64_t total_frames(const std::vector<Voice>& voices) {
  std::int64_t end = 0;
  for (const auto& v : voices) end = std::max(end, v.start + v.frames);
  return end;
}

/// Mono sample of voice `v` at local frame k (0 <= k < v.frames), envelope applied.
inline double voice_sample(const Voice& v, std::int64_t k, double sr) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double t = static_cast<double>(k) / sr;
  const double f = v.event.freq;
  double wave = 0;
  switch (v.event.timbre) {
    case Timbre::single:
      wave = std::sin(two_pi * f * t);
      break;
    case Timbre::double_tone:
      wave = (std::sin(two_pi * f * t) + 0.5 * std::sin(two_pi * 2.0 * f * t)) / 1.5;
      break;
    case Timbre::incremental_step: {
      // Linear chirp from f/2 up to f, then steady at f; phase is continuous.
      const double f0 = kChirpStartRatio * f;
      const double T = kChirpSeconds;
      double phase = 0;
      if (t < T) {
        phase = two_pi * (f0 * t + (f - f0) * t * t / (2.0 * T));
      } else {
        phase = two_pi * (f0 * T + (f - f0) * T / 2.0) + two_pi * f * (t - T);
      }
      wave = std::sin(phase);
      break;
    }
    case Timbre::null_beep:
      wave = std::sin(two_pi * kNullBeepFreq * t);
      break;
  }
  double env = 1.0;
  if (v.ramp > 0) {
    const double r = static_cast<double>(v.ramp);
    env = std::min({1.0, static_cast<double>(k) / r, static_cast<double>(v.frames - k) / r});
  }
  return wave * env;
}

/// Converts a mixed float buffer to int16 after peak normalisation.
inline std::int16_t quantize(double x, double scale, double limit) {
  double y = std::clamp(x * scale * 32767.0, -limit, limit);
  return static_cast<std::int16_t>(y);  // truncates toward zero
}

}  // namespace chartmodal::detail
