#include <CLI11.hpp>
#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "chartmodal/braille.hpp"
#include "chartmodal/cli.hpp"
#include "chartmodal/effect_json.hpp"
#include "chartmodal/error.hpp"
#include "chartmodal/navigator.hpp"
#include "chartmodal/render.hpp"
#include "chartmodal/session_log.hpp"
#include "chartmodal/state_diagram.hpp"
#include "chartmodal/wav.hpp"

namespace chartmodal::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

// The shared tunables, registered on every subcommand that renders something.
struct SettingFlags {
  std::deque<std::pair<std::string, std::string>> values;  // stable addresses for CLI11
  std::vector<std::pair<std::string, CLI::Option*>> options;

  static std::string help_for(std::string_view name) {
    static const std::map<std::string_view, std::string> help = {
        {"columns", "Braille display width in cells"},
        {"volume", "Peak amplitude, 0..1"},
        {"fmin", "Pitch of the lowest value, Hz"},
        {"fmax", "Pitch of the highest value, Hz"},
        {"rate", "Autoplay step, ms"},
        {"duration", "Tone length, ms"},
        {"sample-rate", "Output sample rate, Hz"},
        {"verbosity", "terse or verbose"},
        {"scatter-mode", "separate or combined"},
    };
    auto it = help.find(name);
    return it == help.end() ? std::string() : it->second;
  }

  void attach(CLI::App* sub, const std::vector<std::string_view>& names) {
    for (auto name : names) {
      auto& slot = values.emplace_back(std::string(name), std::string());
      options.emplace_back(std::string(name),
                           sub->add_option("--" + std::string(name), slot.second, help_for(name)));
    }
  }

  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i].second->count() > 0) out[values[i].first] = values[i].second;
    }
    return out;
  }
};

const std::vector<std::string_view> kAudioFlags = {"volume", "fmin", "fmax", "rate", "duration",
                                                  "sample-rate", "scatter-mode"};

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

std::string summary(const ChartSpec& spec) {
  std::string what;
  switch (spec.type()) {
    case PlotType::bar:
      what = plural(spec.data<BarData>().values.size(), "bar");
      break;
    case PlotType::heat: {
      const auto& h = spec.data<HeatData>();
      what = std::to_string(h.rows()) + "x" + std::to_string(h.cols()) + " cells";
      break;
    }
    case PlotType::box:
      what = plural(spec.data<BoxData>().groups.size(), "group");
      break;
    case PlotType::scatter: {
      const auto& s = spec.data<ScatterData>();
      what = plural(s.points.size(), "point") + ", " + plural(s.smooth.size(), "line sample");
      break;
    }
  }
  return std::string(to_string(spec.type())) + " '" + spec.id + "', " + what;
}

class Runner {
 public:
  Runner(std::ostream& out, const Environment& env) : out_(out), env_(env) {}

  CliSettings settings(const SettingFlags& flags) const {
    std::optional<std::string> config;
    const fs::path cfg = env_.cwd / kConfigFileName;
    std::error_code ec;
    if (fs::is_regular_file(cfg, ec)) config = read_file(cfg);
    return resolve_settings(flags.given(), env_.getenv, config);
  }

  int validate(const std::string& path) {
    const ChartSpec spec = parse_spec(read_file(path));
    out_ << "valid: " << summary(spec) << "\n";
    return kOk;
  }

  int braille(const std::string& path, const CliSettings& s) {
    const ChartSpec spec = parse_spec(read_file(path));
    SessionState state = new_session(spec, s.session);
    std::vector<Cursor> focuses = {state.cursor};
    if (spec.type() == PlotType::box) {
      focuses.clear();
      for (std::size_t g = 0; g < spec.data<BoxData>().groups.size(); ++g) focuses.push_back(BoxCursor{g, BoxSlot::min});
    }
    for (const auto& c : focuses) {
      state.cursor = c;
      auto fb = focus_braille(state);
      if (!fb) throw DomainError("this chart has no braille rendering (scatter charts need a smooth line)");
      for (const auto& line : wrap(fb->line, s.session.braille_columns)) out_ << line.utf8() << "\n";
    }
    return kOk;
  }

  int text(const std::string& path, const std::optional<std::string>& at, const std::string& axis,
           const CliSettings& s) {
    const ChartSpec spec = parse_spec(read_file(path));
    NavAxis nav = NavAxis::horizontal;
    if (axis == "vertical") nav = NavAxis::vertical;
    std::vector<Cursor> cursors = at ? std::vector<Cursor>{parse_cursor(spec, *at)} : all_cursors(spec);
    for (const auto& c : cursors) out_ << describe(spec, c, s.verbosity, nav) << "\n";
    return kOk;
  }

  int sonify(const std::string& path, const std::string& wav_out, const std::optional<std::string>& at,
             const std::optional<std::string>& autoplay, bool inward, const std::optional<std::string>& events_out,
             const CliSettings& s) {
    const ChartSpec spec = parse_spec(read_file(path));
    const Cursor from = at ? parse_cursor(spec, *at) : first_cursor(spec);
    std::vector<ToneEvent> events;
    if (autoplay) {
      auto dir = parse_direction(*autoplay);
      if (!dir) throw InvalidDirection("unknown direction '" + *autoplay + "'");
      events = autoplay_schedule(spec, from, *dir, inward ? AutoplayMode::inward : AutoplayMode::outward,
                                 s.scatter_mode, s.session.audio);
    } else {
      events = tones_for_focus(spec, from, s.scatter_mode, s.session.audio);
    }
    const StereoBuffer pcm = render_pcm(events, s.session.audio);
    write_wav(wav_out, pcm);
    if (events_out) write_file(*events_out, tones_to_json(events) + "\n");
    out_ << "wrote " << wav_out << ": " << pcm.frames() << " frames, " << plural(events.size(), "tone") << "\n";
    return kOk;
  }

  int bundle(const std::string& spec_path, const std::string& image, const std::string& html_out,
             const std::optional<std::string>& runtime, bool inline_image) {
    BundleInputs in;
    in.spec_text = read_file(spec_path);
    in.spec = parse_spec(in.spec_text);
    const fs::path runtime_path = locate_runtime(runtime ? std::optional<fs::path>(*runtime) : std::nullopt, env_);
    in.runtime_js = read_file(runtime_path);
    if (inline_image) {
      in.image_ref = "data:" + image_mime_type(image) + ";base64," + base64_encode(read_file(image));
    } else {
      const fs::path base = fs::absolute(env_.cwd / html_out).parent_path();
      in.image_ref = fs::absolute(env_.cwd / image).lexically_normal().lexically_relative(base).generic_string();
    }
    write_file(html_out, make_bundle(in));
    out_ << "wrote " << html_out << "\n";
    return kOk;
  }

  int replay_cmd(const std::string& spec_path, const std::string& log_path, const CliSettings& s) {
    const ChartSpec spec = parse_spec(read_file(spec_path));
    const auto log = log_from_json(read_file(log_path));
    const SessionState final_state = chartmodal::replay(spec, log, s.session);
    out_ << "replayed " << plural(log.size(), "record") << "\n";
    out_ << "final state: " << modality_string(final_state.modalities) << "\n";
    out_ << "cursor: " << to_string(final_state.cursor) << "\n";
    return kOk;
  }

  int diagram(const std::vector<std::string>& log_paths, const std::string& labels,
              const std::optional<std::string>& dot_out) {
    std::vector<std::vector<LogEvent>> logs;
    for (const auto& p : log_paths) logs.push_back(log_from_json(read_file(p)));
    std::vector<std::string> questions;
    if (!labels.empty()) {
      std::stringstream ss(labels);
      std::string item;
      while (std::getline(ss, item, ',')) questions.push_back(item);
    }
    const std::string dot = aggregate_state_diagram(logs, questions).to_dot();
    if (dot_out) {
      write_file(*dot_out, dot);
    } else {
      out_ << dot;
    }
    return kOk;
  }

  int trace(const std::string& spec_path, const std::string& keys_path, const std::optional<std::string>& trace_out,
            const std::optional<std::string>& log_out, const CliSettings& s) {
    const ChartSpec spec = parse_spec(read_file(spec_path));
    SessionState state = new_session(spec, s.session);
    std::vector<TraceStep> steps;
    for (const auto& [t_ms, key] : read_key_script(keys_path)) {
      auto effects = handle_key(state, parse_key(key), t_ms);
      steps.push_back({state.log.back(), std::move(effects)});
    }
    const std::string json = trace_to_json(steps) + "\n";
    if (trace_out) {
      write_file(*trace_out, json);
    } else {
      out_ << json;
    }
    if (log_out) write_file(*log_out, log_to_json(state.log) + "\n");
    return kOk;
  }

 private:
  // A key script is a JSON array of {"t_ms": n, "key": "..."} records or bare
  // key strings; bare strings are spaced 100 ms apart.
  static std::vector<std::pair<std::int64_t, std::string>> read_key_script(const std::string& path) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedDocument(path + ": " + e.what());
    }
    if (!doc.is_array()) throw SchemaViolation("$", "key script must be an array");
    std::vector<std::pair<std::int64_t, std::string>> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& item = doc[i];
      const std::string where = "[" + std::to_string(i) + "]";
      if (item.is_string()) {
        out.emplace_back(static_cast<std::int64_t>(i) * 100, item.get<std::string>());
      } else if (item.is_object() && item.contains("key") && item["key"].is_string() && item.contains("t_ms") &&
                 item["t_ms"].is_number_integer()) {
        out.emplace_back(item["t_ms"].get<std::int64_t>(), item["key"].get<std::string>());
      } else {
        throw SchemaViolation(where, "expected a key string or {t_ms, key}");
      }
    }
    return out;
  }

  std::ostream& out_;
  const Environment& env_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Non-visual chart renderer: braille, text, tones, navigation logs", "chartmodal"};
  app.require_subcommand(1);

  std::string spec_path, second_path, out_path, axis = "horizontal", labels;
  std::optional<std::string> at, autoplay, runtime, events_out, log_out;
  std::vector<std::string> log_paths;
  bool inward = false, inline_image = false;

  auto* validate = app.add_subcommand("validate", "Check a chart spec and summarise it");
  validate->add_option("spec", spec_path, "Chart spec (JSON)")->required();

  SettingFlags braille_flags;
  auto* braille = app.add_subcommand("braille", "Print the chart as braille lines");
  braille->add_option("spec", spec_path)->required();
  braille_flags.attach(braille, {"columns"});

  SettingFlags text_flags;
  auto* text = app.add_subcommand("text", "Describe data positions in words");
  text->add_option("spec", spec_path)->required();
  text->add_option("--at", at, "Cursor, e.g. 3, 1,2, 0,q1, points:2");
  text->add_option("--axis", axis, "Last navigation axis, affects terse phrasing")
      ->check(CLI::IsMember({"horizontal", "vertical"}));
  text_flags.attach(text, {"verbosity"});

  SettingFlags sonify_flags;
  auto* sonify = app.add_subcommand("sonify", "Render the tones for a position or an autoplay run to WAV");
  sonify->add_option("spec", spec_path)->required();
  sonify->add_option("--out", out_path, "WAV file to write")->required();
  sonify->add_option("--at", at, "Starting cursor (default: first position)");
  sonify->add_option("--autoplay", autoplay, "Autoplay direction: left, right, up, down");
  sonify->add_flag("--inward", inward, "Play from the far end back toward the cursor");
  sonify->add_option("--events-out", events_out, "Also write the tone events as JSON");
  sonify_flags.attach(sonify, kAudioFlags);

  auto* bundle = app.add_subcommand("bundle", "Emit a self-contained HTML page for the browser runtime");
  bundle->add_option("spec", spec_path)->required();
  bundle->add_option("image", second_path, "Chart image")->required();
  bundle->add_option("--out", out_path)->required();
  bundle->add_option("--runtime", runtime, "Browser runtime script");
  bundle->add_flag("--inline-image", inline_image, "Embed the image as base64");

  SettingFlags replay_flags;
  auto* replay = app.add_subcommand("replay", "Re-run a session log and check every recorded state");
  replay->add_option("spec", spec_path)->required();
  replay->add_option("log", second_path)->required();
  replay_flags.attach(replay, {"columns"});

  auto* diagram = app.add_subcommand("diagram", "Aggregate session logs into a DOT state diagram");
  diagram->add_option("logs", log_paths)->required();
  diagram->add_option("--labels", labels, "Comma-separated question label per log");
  std::optional<std::string> dot_out;
  diagram->add_option("--out", dot_out);

  SettingFlags trace_flags;
  auto* trace = app.add_subcommand("trace", "Drive the navigator with a key script and print the effect trace");
  trace->add_option("spec", spec_path)->required();
  trace->add_option("keys", second_path, "JSON array of keys or {t_ms, key}")->required();
  std::optional<std::string> trace_out;
  trace->add_option("--out", trace_out);
  trace->add_option("--log-out", log_out, "Also write the session log");
  trace_flags.attach(trace, {"columns", "volume", "fmin", "fmax", "rate", "duration", "sample-rate", "scatter-mode"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(out, env);
  auto resolved = [&](const SettingFlags& f) -> std::optional<CliSettings> {
    try {
      return runner.settings(f);
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return std::nullopt;
    }
  };

  try {
    if (validate->parsed()) return runner.validate(spec_path);
    if (bundle->parsed()) return runner.bundle(spec_path, second_path, out_path, runtime, inline_image);
    if (diagram->parsed()) return runner.diagram(log_paths, labels, dot_out);

    const SettingFlags* flags = braille->parsed()  ? &braille_flags
                                : text->parsed()   ? &text_flags
                                : sonify->parsed() ? &sonify_flags
                                : replay->parsed() ? &replay_flags
                                                   : &trace_flags;
    auto s = resolved(*flags);
    if (!s) return kUsage;
    if (braille->parsed()) return runner.braille(spec_path, *s);
    if (text->parsed()) return runner.text(spec_path, at, axis, *s);
    if (sonify->parsed()) return runner.sonify(spec_path, out_path, at, autoplay, inward, events_out, *s);
    if (replay->parsed()) return runner.replay_cmd(spec_path, second_path, *s);
    return runner.trace(spec_path, second_path, trace_out, log_out, *s);
  } catch (const ChartError& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace chartmodal::cli
