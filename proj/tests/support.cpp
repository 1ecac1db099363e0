#include "support.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace testsupport {

using namespace chartmodal;

std::string fixture_path(const std::string& name) { return std::string(CHARTMODAL_FIXTURE_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ChartSpec load_fixture(const std::string& name) { return parse_spec(read_text(fixture_path(name))); }

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Mix of continuous values and small integers so ties and bin edges show up.
double value(Rng& rng, double lo, double hi) {
  if (pick(rng, 0, 3) == 0) return static_cast<double>(static_cast<long>(uniform(rng, lo, hi)));
  return uniform(rng, lo, hi);
}

std::vector<std::string> labels(std::size_t n, const char* prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

BoxGroup random_box_group(Rng& rng) {
  std::vector<double> q(5);
  for (auto& v : q) v = pick(rng, 0, 4) == 0 ? 10.0 : value(rng, -50, 150);
  std::sort(q.begin(), q.end());
  BoxGroup g;
  g.min = q[0];
  g.q1 = q[1];
  g.q2 = q[2];
  g.q3 = q[3];
  g.max = q[4];
  const std::size_t nl = pick(rng, 0, 3), nu = pick(rng, 0, 3);
  for (std::size_t i = 0; i < nl; ++i) g.lower_outliers.push_back(g.min - uniform(rng, 0.5, 40));
  for (std::size_t i = 0; i < nu; ++i) g.upper_outliers.push_back(g.max + uniform(rng, 0.5, 40));
  return g;
}

ChartSpec random_spec(Rng& rng, PlotType type) {
  ChartSpec spec;
  spec.id = "rand";
  spec.title = "Random chart";
  spec.x_axis.label = "X";
  spec.y_axis.label = "Y";
  switch (type) {
    case PlotType::bar: {
      BarData d;
      const std::size_t n = pick(rng, 1, 30);
      const bool negative = pick(rng, 0, 4) == 0;
      for (std::size_t i = 0; i < n; ++i) d.values.push_back(value(rng, negative ? -100 : 0, 1000));
      spec.x_axis.levels = labels(n, "c");
      spec.payload = d;
      break;
    }
    case PlotType::heat: {
      HeatData d;
      const std::size_t rows = pick(rng, 1, 6), cols = pick(rng, 1, 8);
      d.cells.assign(rows, std::vector<std::optional<double>>(cols));
      for (auto& row : d.cells) {
        for (auto& c : row) {
          if (pick(rng, 0, 5) != 0) c = value(rng, -20, 80);
        }
      }
      d.cells[pick(rng, 0, rows - 1)][pick(rng, 0, cols - 1)] = value(rng, -20, 80);
      spec.x_axis.levels = labels(cols, "x");
      spec.y_axis.levels = labels(rows, "y");
      spec.payload = d;
      break;
    }
    case PlotType::box: {
      BoxData d;
      const std::size_t n = pick(rng, 1, 6);
      for (std::size_t i = 0; i < n; ++i) d.groups.push_back(random_box_group(rng));
      spec.y_axis.levels = labels(n, "g");
      spec.payload = d;
      break;
    }
    case PlotType::scatter: {
      ScatterData d;
      const std::size_t n = pick(rng, 1, 40);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(pick(rng, 0, 15)) / 2;
        d.points.push_back({x, value(rng, 0, 50)});
      }
      const std::size_t m = pick(rng, 0, 25);
      double x = uniform(rng, -1, 1);
      for (std::size_t i = 0; i < m; ++i) {
        d.smooth.push_back({x, value(rng, 0, 50)});
        x += uniform(rng, 0.1, 1.0);
      }
      spec.payload = d;
      break;
    }
  }
  return spec;
}

std::vector<ToneEvent> random_events(Rng& rng, std::size_t max_events) {
  std::vector<ToneEvent> out;
  const std::size_t n = pick(rng, 1, max_events);
  for (std::size_t i = 0; i < n; ++i) {
    ToneEvent e;
    e.freq = uniform(rng, 100, 2000);
    e.pan = uniform(rng, -1, 1);
    e.onset = pick(rng, 0, 2) == 0 ? 0.0 : uniform(rng, 0, 0.6);
    e.dur = uniform(rng, 0.01, 0.4);
    e.timbre = static_cast<Timbre>(pick(rng, 0, 3));
    out.push_back(e);
  }
  return out;
}

Key random_key(Rng& rng) {
  static const std::vector<std::string> kPool = {
      "ArrowLeft", "ArrowRight", "ArrowUp", "ArrowDown",
      "Control+ArrowLeft", "Control+ArrowRight", "Control+ArrowUp", "Control+ArrowDown",
      "Control+Shift+ArrowLeft", "Control+Shift+ArrowRight", "Control+Shift+ArrowUp", "Control+Shift+ArrowDown",
      "Alt+Shift+ArrowLeft", "Alt+Shift+ArrowRight", "Alt+Shift+ArrowUp", "Alt+Shift+ArrowDown",
      "Control+Home", "Control+End", "Space", "B", "T", "S", "R", "Period", "Comma",
      "PageUp", "PageDown", "H", "Escape", "Control", "Q", "Shift+B",
      "Tick", "Tick", "Tick", "Tick", "Tick", "Tick",
  };
  return parse_key(kPool[pick(rng, 0, kPool.size() - 1)]);
}

namespace {

std::uint32_t le32(const std::vector<std::uint8_t>& b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 | static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t le16(const std::vector<std::uint8_t>& b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

bool tag(const std::vector<std::uint8_t>& b, std::size_t at, const char* t) {
  return b[at] == t[0] && b[at + 1] == t[1] && b[at + 2] == t[2] && b[at + 3] == t[3];
}

}  // namespace

std::optional<WavInfo> parse_riff(const std::vector<std::uint8_t>& b) {
  if (b.size() < 12 || !tag(b, 0, "RIFF") || !tag(b, 8, "WAVE")) return std::nullopt;
  WavInfo w;
  w.riff_size = le32(b, 4);
  if (static_cast<std::size_t>(w.riff_size) + 8 != b.size()) return std::nullopt;
  bool have_fmt = false, have_data = false;
  std::size_t at = 12;
  while (at + 8 <= b.size()) {
    const std::uint32_t size = le32(b, at + 4);
    const std::size_t body = at + 8;
    if (body + size > b.size()) return std::nullopt;
    if (tag(b, at, "fmt ")) {
      if (size < 16) return std::nullopt;
      w.format = le16(b, body);
      w.channels = le16(b, body + 2);
      w.sample_rate = le32(b, body + 4);
      w.byte_rate = le32(b, body + 8);
      w.block_align = le16(b, body + 12);
      w.bits = le16(b, body + 14);
      have_fmt = true;
    } else if (tag(b, at, "data")) {
      if (!have_fmt || w.bits != 16 || size % 2 != 0) return std::nullopt;
      w.data_bytes = size;
      w.samples.resize(size / 2);
      for (std::size_t i = 0; i < w.samples.size(); ++i) {
        w.samples[i] = static_cast<std::int16_t>(le16(b, body + 2 * i));
      }
      have_data = true;
    }
    at = body + size + (size & 1);
  }
  if (!have_fmt || !have_data || at != b.size()) return std::nullopt;
  if (w.block_align != w.channels * w.bits / 8 || w.byte_rate != w.sample_rate * w.block_align) return std::nullopt;
  if (w.data_bytes % w.block_align != 0) return std::nullopt;
  return w;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testsupport

namespace testsupport {

namespace {

std::string describe_key(const Key& k, std::size_t i) { return "key #" + std::to_string(i) + " " + to_string(k); }

std::optional<std::string> check_step(std::size_t log_before, const SessionState& after, const Key& key,
                                      const std::vector<Effect>& effects, std::size_t i) {
  const std::string where = describe_key(key, i);
  if (!cursor_valid(after.spec, after.cursor)) return where + ": cursor out of bounds";
  if (after.log.size() != log_before + 1) return where + ": log did not grow by one";
  if (after.log.size() > 1 && after.log.back().t_ms < after.log[after.log.size() - 2].t_ms) {
    return where + ": timestamps went backwards";
  }
  for (const auto& e : effects) {
    if (after.modalities.review && std::holds_alternative<ShowBraille>(e)) {
      return where + ": braille shown while review is on";
    }
    if (auto c = effect_cursor(e); c && *c != after.cursor) return where + ": effect not tethered to the cursor";
  }
  return std::nullopt;
}

std::optional<std::string> check_autoplay(const SessionState& state, std::int64_t t, std::size_t i) {
  if (!state.autoplay) return std::nullopt;
  SessionState copy = state;
  copy.log.clear();
  const std::size_t bound = axis_length(copy.spec, copy.cursor, copy.autoplay->direction);
  std::size_t ticks = 0;
  while (copy.autoplay) {
    handle_key(copy, kTick, t);
    if (!cursor_valid(copy.spec, copy.cursor)) return "autoplay from key #" + std::to_string(i) + " left bounds";
    if (++ticks > bound) return "autoplay from key #" + std::to_string(i) + " did not stop at the boundary";
  }
  SessionState stop = state;
  stop.log.clear();
  handle_key(stop, parse_key("Control"), t);
  if (stop.autoplay) return "Control did not cancel autoplay";
  return std::nullopt;
}

std::optional<std::string> check_periods(const SessionState& state, std::int64_t t) {
  const std::size_t sound_period = state.spec.type() == PlotType::scatter ? 3 : 2;
  const std::pair<const char*, std::size_t> toggles[] = {{"B", 2}, {"T", 3}, {"S", sound_period}, {"R", 2}};
  for (const auto& [name, period] : toggles) {
    SessionState copy = state;
    copy.log.clear();
    for (std::size_t k = 0; k < period; ++k) handle_key(copy, parse_key(name), t);
    if (!(copy.modalities == state.modalities)) return std::string("toggle ") + name + " is not periodic";
  }
  return std::nullopt;
}

}  // namespace

FuzzReport fuzz_navigator(const ChartSpec& spec, Rng& rng, std::size_t n_keys) {
  FuzzReport report;
  SessionState state = new_session(spec);
  std::int64_t t = 0;
  std::uniform_int_distribution<int> dt(0, 400), coin(0, 1);
  for (std::size_t i = 0; i < n_keys; ++i) {
    // Leave the help dialog quickly so most keys exercise navigation.
    Key key = state.help_open && coin(rng) == 0 ? parse_key("Escape") : random_key(rng);
    t += dt(rng);
    const std::size_t log_before = state.log.size();
    const bool help_before = state.help_open;
    const auto effects = handle_key(state, key, t);
    ++report.keys;
    if (auto f = check_step(log_before, state, key, effects, i)) {
      report.failure = f;
      return report;
    }
    const bool started = key.shift && (key.ctrl || key.alt) && state.autoplay && !help_before;
    if (started) {
      ++report.autoplays;
      if (auto f = check_autoplay(state, t, i)) {
        report.failure = f;
        return report;
      }
    }
    if (i % 97 == 0 && !state.help_open) {
      ++report.toggle_checks;
      if (auto f = check_periods(state, t)) {
        report.failure = f;
        return report;
      }
    }
  }
  return report;
}

std::vector<LogEvent> random_session_log(const ChartSpec& spec, Rng& rng, std::size_t n_keys,
                                         SessionState* final_state) {
  SessionState state = new_session(spec);
  std::int64_t t = 0;
  std::uniform_int_distribution<int> dt(0, 500);
  for (std::size_t i = 0; i < n_keys; ++i) {
    t += dt(rng);
    handle_key(state, random_key(rng), t);
  }
  if (final_state) *final_state = state;
  return state.log;
}

}  // namespace testsupport
