#include "chartmodal/sonify.hpp"

#include <algorithm>
#include <cmath>

#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

struct Range {
  double lo;
  double hi;
};

Range bar_range(const std::vector<double>& values) {
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  return {*mn >= 0 ? 0.0 : *mn, *mx};
}

Range heat_range(const HeatData& heat) {
  Range r{0, 0};
  bool seen = false;
  for (const auto& row : heat.cells) {
    for (const auto& c : row) {
      if (!c) continue;
      r.lo = seen ? std::min(r.lo, *c) : *c;
      r.hi = seen ? std::max(r.hi, *c) : *c;
      seen = true;
    }
  }
  return r;
}

// One value axis shared by every group, so equal statistics sound equal.
Range box_range(const BoxData& box) {
  Range r{box.groups.front().min, box.groups.front().max};
  for (const auto& g : box.groups) {
    r.lo = std::min(r.lo, g.min);
    r.hi = std::max(r.hi, g.max);
    for (double v : g.lower_outliers) r.lo = std::min(r.lo, v);
    for (double v : g.upper_outliers) r.hi = std::max(r.hi, v);
  }
  return r;
}

Range y_range(const std::vector<Point>& pts) {
  auto [mn, mx] = std::minmax_element(pts.begin(), pts.end(),
                                      [](const Point& a, const Point& b) { return a.y < b.y; });
  return {mn->y, mx->y};
}

ToneEvent null_beep(double pan, double onset = 0) {
  return {kNullBeepFreq, pan, onset, kNullBeepDur, Timbre::null_beep};
}

std::vector<ToneEvent> box_tones(const BoxData& box, const BoxCursor& c, const AudioSettings& s) {
  const BoxGroup& g = box.groups[c.group];
  const Range r = box_range(box);
  const double pan = pan_map(static_cast<std::size_t>(c.slot), kBoxSlots);
  auto tone = [&](double v, Timbre t) {
    return std::vector<ToneEvent>{{freq_map(v, r.lo, r.hi, s), pan, 0.0, s.tone_dur, t}};
  };
  auto outliers = [&](const std::vector<double>& values) {
    if (values.empty()) return std::vector<ToneEvent>{null_beep(pan)};
    std::vector<ToneEvent> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.push_back({freq_map(values[i], r.lo, r.hi, s), pan, static_cast<double>(i) * s.tone_dur,
                     s.tone_dur, Timbre::incremental_step});
    }
    return out;
  };
  switch (c.slot) {
    case BoxSlot::lower_outliers:
      return outliers(g.lower_outliers);
    case BoxSlot::min:
      return tone(g.min, Timbre::single);
    case BoxSlot::q1:
      return tone(g.q1, Timbre::double_tone);
    case BoxSlot::q2:
      return tone(g.q2, Timbre::double_tone);
    case BoxSlot::q3:
      return tone(g.q3, Timbre::double_tone);
    case BoxSlot::max:
      return tone(g.max, Timbre::single);
    case BoxSlot::upper_outliers:
      return outliers(g.upper_outliers);
  }
  return {};
}

}  // namespace

std::string_view to_string(Timbre t) {
  switch (t) {
    case Timbre::single:
      return "single";
    case Timbre::double_tone:
      return "double";
    case Timbre::incremental_step:
      return "incremental_step";
    case Timbre::null_beep:
      return "null_beep";
  }
  return "";
}

void AudioSettings::validate() const {
  if (!(volume >= 0 && volume <= 1)) throw DomainError("volume must lie in [0, 1]");
  if (!(fmin > 0 && fmin < fmax)) throw DomainError("frequency range needs 0 < fmin < fmax");
  if (!(tone_dur > 0)) throw DomainError("tone duration must be positive");
  if (!(autoplay_rate_ms > 0)) throw DomainError("autoplay rate must be positive");
  if (sample_rate <= 0) throw DomainError("sample rate must be positive");
}

double freq_map(double y, double ylo, double yhi, const AudioSettings& s) {
  if (ylo == yhi) return (s.fmin + s.fmax) / 2;
  const double t = (std::clamp(y, ylo, yhi) - ylo) / (yhi - ylo);
  if (t == 1.0) return s.fmax;
  return s.fmin + t * (s.fmax - s.fmin);
}

double pan_map(std::size_t index, std::size_t n) {
  if (n <= 1) return 0.0;
  return -1.0 + 2.0 * static_cast<double>(index) / static_cast<double>(n - 1);
}

std::vector<ToneEvent> tones_for_focus(const ChartSpec& spec, const Cursor& cursor,
                                       ScatterMode scatter_mode, const AudioSettings& s) {
  require_cursor(spec, cursor);
  switch (spec.type()) {
    case PlotType::bar: {
      const auto& values = spec.data<BarData>().values;
      const std::size_t i = std::get<BarCursor>(cursor).index;
      const Range r = bar_range(values);
      return {{freq_map(values[i], r.lo, r.hi, s), pan_map(i, values.size()), 0.0, s.tone_dur,
               Timbre::single}};
    }
    case PlotType::heat: {
      const auto& heat = spec.data<HeatData>();
      const auto c = std::get<HeatCursor>(cursor);
      const double pan = pan_map(c.col, heat.cols());
      const auto& v = heat.cells[c.row][c.col];
      if (!v) return {null_beep(pan)};
      const Range r = heat_range(heat);
      return {{freq_map(*v, r.lo, r.hi, s), pan, 0.0, s.tone_dur, Timbre::single}};
    }
    case PlotType::box:
      return box_tones(spec.data<BoxData>(), std::get<BoxCursor>(cursor), s);
    case PlotType::scatter: {
      const auto& data = spec.data<ScatterData>();
      const auto c = std::get<ScatterCursor>(cursor);
      if (c.layer == ScatterLayer::line) {
        const Range r = y_range(data.smooth);
        return {{freq_map(data.smooth[c.index].y, r.lo, r.hi, s), pan_map(c.index, data.smooth.size()),
                 0.0, s.tone_dur, Timbre::single}};
      }
      const auto groups = group_scatter_points(data.points);
      const Range r = y_range(data.points);
      const double pan = pan_map(c.index, groups.size());
      std::vector<ToneEvent> out;
      const auto& ys = groups[c.index].ys;
      for (std::size_t i = 0; i < ys.size(); ++i) {
        const double onset = scatter_mode == ScatterMode::separate ? static_cast<double>(i) * s.tone_dur : 0.0;
        out.push_back({freq_map(ys[i], r.lo, r.hi, s), pan, onset, s.tone_dur, Timbre::single});
      }
      return out;
    }
  }
  return {};
}

std::vector<ToneEvent> autoplay_schedule(const ChartSpec& spec, const Cursor& from, Direction dir,
                                         AutoplayMode mode, ScatterMode scatter_mode,
                                         const AudioSettings& s) {
  require_cursor(spec, from);
  if (!direction_supported(spec, dir)) {
    throw InvalidDirection(std::string(to_string(spec.type())) + " charts cannot autoplay " +
                           std::string(to_string(dir)));
  }
  std::vector<ToneEvent> out;
  const auto walk = autoplay_walk(spec, from, dir, mode);
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const double offset = static_cast<double>(k) * s.autoplay_rate_ms / 1000.0;
    for (auto ev : tones_for_focus(spec, walk[k], scatter_mode, s)) {
      ev.onset += offset;
      out.push_back(ev);
    }
  }
  return out;
}

double schedule_length(const std::vector<ToneEvent>& events) {
  double end = 0;
  for (const auto& e : events) end = std::max(end, e.onset + e.dur);
  return end;
}

}  // namespace chartmodal
