#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chartmodal/navigator.hpp"

namespace chartmodal {

/// Log file: a JSON array of {"t_ms": int, "key": string, "state": string},
/// one record per key event, in event order.
std::string log_to_json(std::span<const LogEvent> log);

/// Throws MalformedDocument for non-JSON text and SchemaViolation for records
/// of the wrong shape.
std::vector<LogEvent> log_from_json(std::string_view text);

}  // namespace chartmodal
