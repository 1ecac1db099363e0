#include <omp.h>

#include <cmath>

#include "chartmodal/render.hpp"
#include "render_kernel.hpp"

namespace chartmodal {

namespace {

constexpr std::int64_t kBlockFrames = 4096;

}  // namespace

StereoBuffer render_pcm(std::span<const ToneEvent> events, const AudioSettings& s) {
  const auto voices = detail::make_voices(events, s);
  const std::int64_t frames = detail::total_frames(voices);
  const std::int64_t blocks = (frames + kBlockFrames - 1) / kBlockFrames;
  const double sr = s.sample_rate;

  std::vector<double> mix(static_cast<std::size_t>(2 * frames), 0.0);

  // Each block owns its frames, and within a frame voices are summed in event
  // order, matching the serial mixer's accumulation order.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t lo = b * kBlockFrames;
    const std::int64_t hi = std::min(frames, lo + kBlockFrames);
    for (const auto& v : voices) {
      const std::int64_t from = std::max(lo, v.start);
      const std::int64_t to = std::min(hi, v.start + v.frames);
      for (std::int64_t f = from; f < to; ++f) {
        const double x = detail::voice_sample(v, f - v.start, sr);
        const auto i = static_cast<std::size_t>(2 * f);
        mix[i] += v.gain_l * x;
        mix[i + 1] += v.gain_r * x;
      }
    }
  }

  const auto n = static_cast<std::int64_t>(mix.size());
  double peak = 0;
#pragma omp parallel for reduction(max : peak)
  for (std::int64_t i = 0; i < n; ++i) peak = std::max(peak, std::abs(mix[static_cast<std::size_t>(i)]));

  const double scale = peak > s.volume ? s.volume / peak : 1.0;
  const double limit = std::floor(s.volume * 32767.0);

  StereoBuffer out;
  out.sample_rate = s.sample_rate;
  out.samples.resize(mix.size());
#pragma omp parallel for
  for (std::int64_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    out.samples[j] = detail::quantize(mix[j], scale, limit);
  }
  return out;
}

}  // namespace chartmodal
