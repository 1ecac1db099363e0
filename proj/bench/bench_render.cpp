// Serial reference vs OpenMP mixer on autoplay-sized event lists.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chartmodal/render.hpp"

namespace {

std::vector<chartmodal::ToneEvent> make_events(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> freq(200, 1000), pan(-1, 1);
  std::vector<chartmodal::ToneEvent> events;
  for (std::size_t i = 0; i < n; ++i) {
    auto timbre = static_cast<chartmodal::Timbre>(i % 4);
    events.push_back({freq(rng), pan(rng), 0.125 * static_cast<double>(i), 0.25, timbre});
  }
  return events;
}

void BM_RenderSerial(benchmark::State& state) {
  const auto events = make_events(static_cast<std::size_t>(state.range(0)));
  const chartmodal::AudioSettings s;
  for (auto _ : state) benchmark::DoNotOptimize(chartmodal::render_pcm_serial(events, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RenderOmp(benchmark::State& state) {
  const auto events = make_events(static_cast<std::size_t>(state.range(0)));
  const chartmodal::AudioSettings s;
  for (auto _ : state) benchmark::DoNotOptimize(chartmodal::render_pcm(events, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_RenderSerial)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderOmp)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
