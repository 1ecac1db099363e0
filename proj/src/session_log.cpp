#include "chartmodal/session_log.hpp"

#include <json.hpp>

#include "chartmodal/error.hpp"

namespace chartmodal {

using nlohmann::json;

std::string log_to_json(std::span<const LogEvent> log) {
  json arr = json::array();
  for (const auto& e : log) arr.push_back({{"t_ms", e.t_ms}, {"key", e.key}, {"state", e.state}});
  return arr.dump(1);
}

std::vector<LogEvent> log_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("log is not JSON: ") + e.what());
  }
  if (!root.is_array()) throw SchemaViolation("$", "log must be an array of records");
  std::vector<LogEvent> out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string path = "[" + std::to_string(i) + "]";
    const json& r = root[i];
    if (!r.is_object()) throw SchemaViolation(path, "record must be an object");
    auto t = r.find("t_ms");
    auto k = r.find("key");
    auto s = r.find("state");
    if (t == r.end() || !t->is_number_integer()) throw SchemaViolation(path + ".t_ms", "expected an integer");
    if (k == r.end() || !k->is_string()) throw SchemaViolation(path + ".key", "expected a string");
    if (s == r.end() || !s->is_string()) throw SchemaViolation(path + ".state", "expected a string");
    out.push_back({t->get<std::int64_t>(), k->get<std::string>(), s->get<std::string>()});
  }
  return out;
}

}  // namespace chartmodal
