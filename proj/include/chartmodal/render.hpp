#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chartmodal/sonify.hpp"

namespace chartmodal {

/// Interleaved 16-bit stereo PCM.
struct StereoBuffer {
  int sample_rate = 44100;
  std::vector<std::int16_t> samples;  // L, R, L, R, ...

  std::size_t frames() const { return samples.size() / 2; }
  bool operator==(const StereoBuffer&) const = default;
};

/// Length in frames of a render of `events`.
std::size_t render_frames(std::span<const ToneEvent> events, int sample_rate);

/// Mixes tone events into PCM. Each event is a sine voice shaped by its timbre
/// with 10 ms linear attack and release, placed with equal-power panning at
/// `volume`. When overlapping voices would exceed `volume` the whole mix is
/// scaled down, so the peak never does. Parallelised with OpenMP; the result
/// is bit-identical to render_pcm_serial.
StereoBuffer render_pcm(std::span<const ToneEvent> events, const AudioSettings& s);

/// Single-threaded reference mixer, kept for testing and benchmarking.
StereoBuffer render_pcm_serial(std::span<const ToneEvent> events, const AudioSettings& s);

}  // namespace chartmodal
