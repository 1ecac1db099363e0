#include "chartmodal/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

#include "chartmodal/error.hpp"

namespace chartmodal {

namespace {

double to_double(std::string_view name, std::string_view text) {
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DomainError("setting '" + std::string(name) + "' expects a number, got '" + std::string(text) + "'");
  }
  return v;
}

long to_integer(std::string_view name, std::string_view text) {
  long v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DomainError("setting '" + std::string(name) + "' expects an integer, got '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::string env_var_name(std::string_view setting) {
  std::string out = "CHARTMODAL_";
  for (char c : setting) out += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void apply_setting(CliSettings& s, std::string_view name, std::string_view value) {
  AudioSettings& audio = s.session.audio;
  if (name == "columns") {
    long v = to_integer(name, value);
    if (v < 1) throw DomainError("columns must be at least 1");
    s.session.braille_columns = static_cast<std::size_t>(v);
  } else if (name == "volume") {
    audio.volume = to_double(name, value);
  } else if (name == "fmin") {
    audio.fmin = to_double(name, value);
  } else if (name == "fmax") {
    audio.fmax = to_double(name, value);
  } else if (name == "rate") {
    audio.autoplay_rate_ms = to_double(name, value);
  } else if (name == "duration") {
    audio.tone_dur = to_double(name, value) / 1000.0;
  } else if (name == "sample-rate") {
    audio.sample_rate = static_cast<int>(to_integer(name, value));
  } else if (name == "verbosity") {
    if (value == "terse") {
      s.verbosity = Verbosity::terse;
    } else if (value == "verbose") {
      s.verbosity = Verbosity::verbose;
    } else {
      throw DomainError("verbosity must be terse or verbose");
    }
  } else if (name == "scatter-mode") {
    if (value == "separate") {
      s.scatter_mode = ScatterMode::separate;
    } else if (value == "combined") {
      s.scatter_mode = ScatterMode::combined;
    } else {
      throw DomainError("scatter-mode must be separate or combined");
    }
  } else {
    throw DomainError("unknown setting '" + std::string(name) + "'");
  }
}

CliSettings resolve_settings(const std::map<std::string, std::string>& flags, const EnvLookup& env,
                             const std::optional<std::string>& config_text) {
  CliSettings s;
  if (config_text) {
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(*config_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedDocument(std::string(kConfigFileName) + " is not JSON: " + e.what());
    }
    if (!cfg.is_object()) throw SchemaViolation(std::string(kConfigFileName), "expected an object");
    for (const auto& [key, value] : cfg.items()) {
      apply_setting(s, key, value.is_string() ? value.get<std::string>() : value.dump());
    }
  }
  if (env) {
    for (auto name : kSettingNames) {
      if (auto v = env(env_var_name(name))) apply_setting(s, name, *v);
    }
  }
  for (const auto& [name, value] : flags) apply_setting(s, name, value);
  s.session.audio.validate();
  return s;
}

}  // namespace chartmodal
