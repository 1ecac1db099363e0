#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "chartmodal/navigator.hpp"

namespace chartmodal {

/// Everything a CLI run can configure.
struct CliSettings {
  SessionSettings session;
  Verbosity verbosity = Verbosity::verbose;
  ScatterMode scatter_mode = ScatterMode::separate;
};

/// Setting names as spelled on the command line (without "--").
inline constexpr std::string_view kSettingNames[] = {"columns", "volume",   "fmin",      "fmax",
                                                     "rate",    "duration", "sample-rate", "verbosity",
                                                     "scatter-mode"};

/// "sample-rate" -> "CHARTMODAL_SAMPLE_RATE".
std::string env_var_name(std::string_view setting);

inline constexpr std::string_view kConfigFileName = "chartmodal.json";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Sets one named setting from text. Throws DomainError on an unknown name
/// or an unparsable or out-of-range value.
void apply_setting(CliSettings& settings, std::string_view name, std::string_view value);

/// Resolves settings with precedence flags > environment > config file >
/// built-in defaults. `config_text` is the content of the config file (a JSON
/// object keyed by setting name), if one exists.
CliSettings resolve_settings(const std::map<std::string, std::string>& flags, const EnvLookup& env,
                             const std::optional<std::string>& config_text);

}  // namespace chartmodal
