#include <cmath>

#include "chartmodal/render.hpp"
#include "render_kernel.hpp"

namespace chartmodal {

std::size_t render_frames(std::span<const ToneEvent> events, int sample_rate) {
  AudioSettings s;
  s.sample_rate = sample_rate;
  return static_cast<std::size_t>(detail::total_frames(detail::make_voices(events, s)));
}

StereoBuffer render_pcm_serial(std::span<const ToneEvent> events, const AudioSettings& s) {
  const auto voices = detail::make_voices(events, s);
  const std::int64_t frames = detail::total_frames(voices);
  const double sr = s.sample_rate;

  std::vector<double> mix(static_cast<std::size_t>(2 * frames), 0.0);
  for (const auto& v : voices) {
    for (std::int64_t k = 0; k < v.frames; ++k) {
      const double x = detail::voice_sample(v, k, sr);
      const auto i = static_cast<std::size_t>(2 * (v.start + k));
      mix[i] += v.gain_l * x;
      mix[i + 1] += v.gain_r * x;
    }
  }

  double peak = 0;
  for (double x : mix) peak = std::max(peak, std::abs(x));
  const double scale = peak > s.volume ? s.volume / peak : 1.0;
  const double limit = std::floor(s.volume * 32767.0);

  StereoBuffer out;
  out.sample_rate = s.sample_rate;
  out.samples.resize(mix.size());
  for (std::size_t i = 0; i < mix.size(); ++i) out.samples[i] = detail::quantize(mix[i], scale, limit);
  return out;
}

}  // namespace chartmodal
