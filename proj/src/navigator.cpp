#include "chartmodal/navigator.hpp"

#include <algorithm>
#include <cmath>

#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

std::optional<Direction> arrow(const std::string& name) {
  if (name == "ArrowLeft") return Direction::left;
  if (name == "ArrowRight") return Direction::right;
  if (name == "ArrowUp") return Direction::up;
  if (name == "ArrowDown") return Direction::down;
  return std::nullopt;
}

NavAxis axis_of(Direction d) {
  return d == Direction::left || d == Direction::right ? NavAxis::horizontal : NavAxis::vertical;
}

bool plain(const Key& k) { return !k.ctrl && !k.alt && !k.shift; }

ScatterMode scatter_mode(SoundState s) {
  return s == SoundState::combined ? ScatterMode::combined : ScatterMode::separate;
}

std::string help_field_text(const SessionSettings& s, HelpField f) {
  switch (f) {
    case HelpField::volume:
      return "Volume " + format_number(s.audio.volume);
    case HelpField::braille_columns:
      return "Braille columns " + std::to_string(s.braille_columns);
    case HelpField::autoplay_rate:
      return "Autoplay rate " + format_number(s.audio.autoplay_rate_ms) + " milliseconds";
    case HelpField::fmin:
      return "Minimum frequency " + format_number(s.audio.fmin) + " hertz";
    case HelpField::fmax:
      return "Maximum frequency " + format_number(s.audio.fmax) + " hertz";
  }
  return {};
}

void adjust_setting(SessionSettings& s, HelpField f, int delta) {
  switch (f) {
    case HelpField::volume:
      s.audio.volume = std::clamp(std::round(s.audio.volume * 10 + delta) / 10, 0.0, 1.0);
      break;
    case HelpField::braille_columns:
      if (delta > 0) {
        s.braille_columns = std::min<std::size_t>(s.braille_columns + 1, 400);
      } else if (s.braille_columns > 1) {
        --s.braille_columns;
      }
      break;
    case HelpField::autoplay_rate:
      s.audio.autoplay_rate_ms =
          std::clamp(s.audio.autoplay_rate_ms + 10.0 * delta, kMinAutoplayRateMs, kMaxAutoplayRateMs);
      break;
    case HelpField::fmin:
      s.audio.fmin = std::clamp(s.audio.fmin + 10.0 * delta, 10.0, s.audio.fmax - 10.0);
      break;
    case HelpField::fmax:
      s.audio.fmax = std::clamp(s.audio.fmax + 10.0 * delta, s.audio.fmin + 10.0, 20000.0);
      break;
  }
}

class KeyHandler {
 public:
  explicit KeyHandler(SessionState& s) : s_(s) {}

  std::vector<Effect> run(const Key& key) {
    if (s_.help_open) {
      help(key);
    } else {
      dispatch(key);
    }
    return std::move(out_);
  }

 private:
  void emit(Effect e) { out_.push_back(std::move(e)); }

  void focal() {
    auto fx = focal_effects(s_);
    for (auto& e : fx) emit(std::move(e));
  }

  void move_to(const Cursor& c) {
    s_.cursor = c;
    focal();
  }

  void help(const Key& key) {
    if (!plain(key)) return;
    constexpr int kFields = 5;
    int field = static_cast<int>(s_.help_field);
    if (key.name == "Escape") {
      s_.help_open = false;
      emit(CloseHelp{});
    } else if (key.name == "ArrowUp" || key.name == "ArrowDown") {
      field = (field + (key.name == "ArrowDown" ? 1 : kFields - 1)) % kFields;
      s_.help_field = static_cast<HelpField>(field);
      emit(Speak{help_field_text(s_.settings, s_.help_field), std::nullopt});
    } else if (key.name == "ArrowLeft" || key.name == "ArrowRight") {
      adjust_setting(s_.settings, s_.help_field, key.name == "ArrowRight" ? 1 : -1);
      emit(Speak{help_field_text(s_.settings, s_.help_field), std::nullopt});
      // A new display width re-flows the braille right away.
      if (s_.help_field == HelpField::braille_columns && s_.modalities.braille && !s_.modalities.review) {
        for (auto& e : focal_effects(s_)) {
          if (std::holds_alternative<ShowBraille>(e)) emit(std::move(e));
        }
      }
    }
  }

  void dispatch(const Key& key) {
    const std::string& name = key.name;
    if (name == "Tick" && plain(key)) return tick();
    if (name == "Control" && plain(key)) {
      s_.autoplay.reset();
      return;
    }
    if (auto dir = arrow(name)) {
      if (key.shift && key.ctrl && !key.alt) return start_autoplay(*dir, AutoplayMode::outward);
      if (key.shift && key.alt && !key.ctrl) return start_autoplay(*dir, AutoplayMode::inward);
      if (key.ctrl && !key.alt && !key.shift) return jump(*dir);
      if (plain(key)) return move(*dir);
      return;
    }
    if ((name == "Home" || name == "End") && key.ctrl && !key.alt && !key.shift) {
      s_.autoplay.reset();
      const Cursor target = name == "Home" ? home_cursor(s_.spec, s_.cursor) : end_cursor(s_.spec, s_.cursor);
      if (target == s_.cursor) return emit(BoundaryCue{});
      return move_to(target);
    }
    if (!plain(key)) return;
    if (name == "Space") return focal();
    if (name == "B") return toggle_braille();
    if (name == "T") return cycle_text();
    if (name == "S") return cycle_sound();
    if (name == "R") return toggle_review();
    if (name == "Period" || name == "Comma") return change_rate(name == "Period");
    if (name == "PageUp" || name == "PageDown") return switch_layer(name == "PageUp");
    if (name == "H") {
      s_.autoplay.reset();
      s_.help_open = true;
      return emit(OpenHelp{});
    }
  }

  void move(Direction dir) {
    s_.autoplay.reset();
    if (!direction_supported(s_.spec, dir)) return;
    s_.last_axis = axis_of(dir);
    auto next = step(s_.spec, s_.cursor, dir);
    if (!next) return emit(BoundaryCue{});
    move_to(*next);
  }

  void jump(Direction dir) {
    s_.autoplay.reset();
    if (!direction_supported(s_.spec, dir)) return;
    s_.last_axis = axis_of(dir);
    const Cursor target = extreme(s_.spec, s_.cursor, dir);
    if (target == s_.cursor) return emit(BoundaryCue{});
    move_to(target);
  }

  void start_autoplay(Direction dir, AutoplayMode mode) {
    s_.autoplay.reset();
    if (!direction_supported(s_.spec, dir)) return;
    s_.last_axis = axis_of(dir);
    auto walk = autoplay_walk(s_.spec, s_.cursor, dir, mode);
    const Cursor first = walk.front();
    if (walk.size() > 1) s_.autoplay = AutoplayState{dir, mode, std::move(walk), 1};
    move_to(first);
  }

  void tick() {
    if (!s_.autoplay) return;
    AutoplayState& ap = *s_.autoplay;
    const Cursor c = ap.walk[ap.next++];
    if (ap.next >= ap.walk.size()) s_.autoplay.reset();
    move_to(c);
  }

  void announce(Modality m, std::string_view state) {
    emit(Speak{announce_modality(m, state), std::nullopt});
  }

  void toggle_braille() {
    s_.modalities.braille = !s_.modalities.braille;
    announce(Modality::braille, s_.modalities.braille ? "on" : "off");
    focal();
  }

  void cycle_text() {
    s_.modalities.text = next(s_.modalities.text);
    announce(Modality::text, to_string(s_.modalities.text));
    focal();
  }

  void cycle_sound() {
    SoundState& snd = s_.modalities.sound;
    if (s_.spec.type() == PlotType::scatter) {
      snd = snd == SoundState::off        ? SoundState::separate
            : snd == SoundState::separate ? SoundState::combined
                                          : SoundState::off;
    } else {
      snd = snd == SoundState::off ? SoundState::on : SoundState::off;
    }
    announce(Modality::sonification, to_string(snd));
    focal();
  }

  void toggle_review() {
    s_.modalities.review = !s_.modalities.review;
    announce(Modality::review, s_.modalities.review ? "on" : "off");
    if (!s_.modalities.review) emit(HideReview{});
    focal();
  }

  void change_rate(bool faster) {
    double& rate = s_.settings.audio.autoplay_rate_ms;
    rate = faster ? rate / kAutoplayRateFactor : rate * kAutoplayRateFactor;
    rate = std::clamp(rate, kMinAutoplayRateMs, kMaxAutoplayRateMs);
    emit(Speak{help_field_text(s_.settings, HelpField::autoplay_rate), std::nullopt});
  }

  void switch_layer(bool up) {
    auto* sc = std::get_if<ScatterCursor>(&s_.cursor);
    if (!sc || s_.spec.data<ScatterData>().smooth.empty()) return;
    s_.autoplay.reset();
    const ScatterLayer target = up ? ScatterLayer::line : ScatterLayer::points;
    if (sc->layer == target) return emit(BoundaryCue{});
    move_to(chartmodal::switch_layer(s_.spec.data<ScatterData>(), s_.scatter_groups, *sc, target));
  }

  SessionState& s_;
  std::vector<Effect> out_;
};

}  // namespace

std::optional<Cursor> effect_cursor(const Effect& effect) {
  return std::visit(
      [](const auto& e) -> std::optional<Cursor> {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Speak>) {
          return e.cursor;
        } else if constexpr (std::is_same_v<T, ShowBraille> || std::is_same_v<T, PlayTones> ||
                             std::is_same_v<T, ShowReview>) {
          return e.cursor;
        } else {
          return std::nullopt;
        }
      },
      effect);
}

std::string_view to_string(SoundState s) {
  switch (s) {
    case SoundState::off:
      return "off";
    case SoundState::on:
      return "on";
    case SoundState::separate:
      return "separate";
    case SoundState::combined:
      return "combined";
  }
  return "";
}

std::string modality_string(const Modalities& m) {
  std::string out;
  if (m.sound != SoundState::off) out += 'S';
  if (m.text != Verbosity::off) out += 'T';
  if (m.braille) out += 'B';
  if (m.review) out += 'R';
  return out.empty() ? "Start" : out;
}

SessionState new_session(ChartSpec spec, SessionSettings settings) {
  settings.audio.validate();
  if (settings.braille_columns == 0) throw DomainError("braille display needs at least one column");
  SessionState s;
  s.spec = std::move(spec);
  if (s.spec.type() == PlotType::scatter) {
    s.scatter_groups = group_scatter_points(s.spec.data<ScatterData>().points);
  }
  s.cursor = first_cursor(s.spec);
  s.settings = settings;
  return s;
}

std::optional<FocusBraille> focus_braille(const SessionState& s) {
  const ChartSpec& spec = s.spec;
  switch (spec.type()) {
    case PlotType::bar:
      return FocusBraille{encode_bar(spec.data<BarData>().values), std::get<BarCursor>(s.cursor).index};
    case PlotType::heat: {
      const auto c = std::get<HeatCursor>(s.cursor);
      const auto& heat = spec.data<HeatData>();
      return FocusBraille{encode_heat(heat), c.row * heat.cols() + c.col};
    }
    case PlotType::box: {
      const auto c = std::get<BoxCursor>(s.cursor);
      const BoxGroup& g = spec.data<BoxData>().groups[c.group];
      const std::size_t width = std::max(s.settings.braille_columns, box_min_width(g));
      return FocusBraille{encode_box(g, width), static_cast<std::size_t>(c.slot)};
    }
    case PlotType::scatter: {
      const auto& data = spec.data<ScatterData>();
      if (data.smooth.empty()) return std::nullopt;
      auto c = std::get<ScatterCursor>(s.cursor);
      if (c.layer == ScatterLayer::points) c = switch_layer(data, s.scatter_groups, c, ScatterLayer::line);
      return FocusBraille{encode_smooth(data.smooth, s.settings.braille_columns), c.index};
    }
  }
  return std::nullopt;
}

std::vector<Effect> focal_effects(const SessionState& s) {
  std::vector<Effect> out;
  const Modalities& m = s.modalities;
  if (m.text != Verbosity::off) {
    out.push_back(Speak{describe(s.spec, s.cursor, m.text, s.last_axis), s.cursor});
  }
  if (m.braille && !m.review) {
    if (auto fb = focus_braille(s)) {
      out.push_back(ShowBraille{wrap(fb->line, s.settings.braille_columns),
                                fb->line.cursor_cell(fb->position), s.cursor});
    }
  }
  if (m.sound != SoundState::off) {
    out.push_back(PlayTones{tones_for_focus(s.spec, s.cursor, scatter_mode(m.sound), s.settings.audio),
                            s.cursor});
  }
  if (m.review) {
    out.push_back(ShowReview{describe(s.spec, s.cursor, Verbosity::verbose, s.last_axis), s.cursor});
  }
  return out;
}

std::vector<Effect> handle_key(SessionState& state, const Key& key, std::int64_t t_ms) {
  if (!state.log.empty()) t_ms = std::max(t_ms, state.log.back().t_ms);
  auto effects = KeyHandler(state).run(key);
  state.log.push_back({t_ms, to_string(key), modality_string(state.modalities)});
  return effects;
}

SessionState replay(const ChartSpec& spec, std::span<const LogEvent> log, SessionSettings settings) {
  SessionState s = new_session(spec, settings);
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (i > 0 && log[i].t_ms < log[i - 1].t_ms) throw ReplayMismatch(i, "timestamp goes backwards");
    handle_key(s, parse_key(log[i].key), log[i].t_ms);
    const std::string& got = s.log.back().state;
    if (got != log[i].state) {
      throw ReplayMismatch(i, "logged state '" + log[i].state + "' but replay reached '" + got + "'");
    }
  }
  return s;
}

}  // namespace chartmodal
