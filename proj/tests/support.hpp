#pragma once

// Shared helpers for the unit tests and the acceptance runner: fixture
// loading, random valid specs, a key generator and an independent RIFF reader.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chartmodal/chart_spec.hpp"
#include "chartmodal/keys.hpp"
#include "chartmodal/navigator.hpp"
#include "chartmodal/sonify.hpp"

namespace testsupport {

std::string fixture_path(const std::string& name);
std::string read_text(const std::string& path);
chartmodal::ChartSpec load_fixture(const std::string& name);

using Rng = std::mt19937_64;

chartmodal::BoxGroup random_box_group(Rng& rng);
chartmodal::ChartSpec random_spec(Rng& rng, chartmodal::PlotType type);
std::vector<chartmodal::ToneEvent> random_events(Rng& rng, std::size_t max_events);

/// Draws from every key the navigator understands, plus a few it ignores.
/// Tick is over-weighted so autoplay runs actually progress.
chartmodal::Key random_key(Rng& rng);

struct FuzzReport {
  std::size_t keys = 0;
  std::size_t autoplays = 0;  // autoplay runs driven to completion
  std::size_t toggle_checks = 0;
  std::optional<std::string> failure;  // first broken invariant
};

/// Feeds `n_keys` random keys to a fresh session and checks after each one:
/// cursor in bounds, all effects tethered to the cursor, no braille while
/// review is on, log grows by one with non-decreasing time. Every autoplay
/// start is also driven to completion on a copy, bounded by the axis length,
/// and toggle keys are periodically checked for periodicity.
FuzzReport fuzz_navigator(const chartmodal::ChartSpec& spec, Rng& rng, std::size_t n_keys);

/// A random session log for `spec` with `n_keys` key events.
std::vector<chartmodal::LogEvent> random_session_log(const chartmodal::ChartSpec& spec, Rng& rng,
                                                     std::size_t n_keys, chartmodal::SessionState* final_state);

struct WavInfo {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint32_t byte_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
  std::uint32_t riff_size = 0;
  std::uint32_t data_bytes = 0;
  std::vector<std::int16_t> samples;  // interleaved

  std::size_t frames() const { return channels == 0 ? 0 : samples.size() / channels; }
};

/// Reads a canonical or chunked RIFF/WAVE byte stream. Returns nullopt on any
/// structural inconsistency.
std::optional<WavInfo> parse_riff(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_bytes(const std::string& path);

}  // namespace testsupport
