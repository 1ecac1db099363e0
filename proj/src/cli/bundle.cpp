#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>

#include "chartmodal/cli.hpp"
#include "chartmodal/error.hpp"

namespace chartmodal::cli {

namespace fs = std::filesystem;

Environment Environment::from_process(const char* argv0) {
  Environment env;
  env.getenv = [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
  std::error_code ec;
  env.cwd = fs::current_path(ec);
  if (argv0 != nullptr) {
    fs::path exe = fs::canonical("/proc/self/exe", ec);
    if (ec) exe = fs::absolute(argv0, ec);
    env.exe_dir = exe.parent_path();
  }
  return env;
}

fs::path locate_runtime(const std::optional<fs::path>& explicit_path, const Environment& env) {
  std::error_code ec;
  if (explicit_path) {
    if (fs::is_regular_file(*explicit_path, ec)) return *explicit_path;
    throw MissingRuntimeAsset("runtime script not found: " + explicit_path->string());
  }
  if (env.getenv) {
    if (auto v = env.getenv(std::string(kRuntimeEnvVar))) {
      if (fs::is_regular_file(*v, ec)) return *v;
      throw MissingRuntimeAsset(std::string(kRuntimeEnvVar) + " points at a missing file: " + *v);
    }
  }
  const fs::path rel = fs::path("web-runtime") / "dist" / "runtime.js";
  std::vector<fs::path> tried;
  for (fs::path dir = env.cwd; !dir.empty(); dir = dir.parent_path()) {
    tried.push_back(dir / rel);
    if (dir == dir.parent_path()) break;
  }
  if (!env.exe_dir.empty()) tried.push_back(env.exe_dir / "runtime.js");
  for (const auto& p : tried) {
    if (fs::is_regular_file(p, ec)) return p;
  }
  throw MissingRuntimeAsset("browser runtime has not been built (looked for " + rel.string() +
                            "); pass --runtime or set " + std::string(kRuntimeEnvVar));
}

std::string base64_encode(std::string_view bytes) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const unsigned v = static_cast<unsigned char>(bytes[i]) << 16 | static_cast<unsigned char>(bytes[i + 1]) << 8 |
                       static_cast<unsigned char>(bytes[i + 2]);
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += kAlphabet[v >> 6 & 63];
    out += kAlphabet[v & 63];
  }
  const std::size_t rest = bytes.size() - i;
  if (rest > 0) {
    unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += rest == 2 ? kAlphabet[v >> 6 & 63] : '=';
    out += '=';
  }
  return out;
}

std::string image_mime_type(const fs::path& image) {
  std::string ext = image.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  static const std::array<std::pair<std::string_view, std::string_view>, 6> kTypes = {{
      {".png", "image/png"},
      {".jpg", "image/jpeg"},
      {".jpeg", "image/jpeg"},
      {".gif", "image/gif"},
      {".svg", "image/svg+xml"},
      {".webp", "image/webp"},
  }};
  for (const auto& [e, mime] : kTypes) {
    if (ext == e) return std::string(mime);
  }
  return "application/octet-stream";
}

namespace {

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Inside <script> only "</" can end the element early. "<\/" means the same
// thing to a JSON or JS parser.
std::string script_safe(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == '<' && i + 1 < s.size() && s[i + 1] == '/') out += '\\';
  }
  return out;
}

}  // namespace

std::string make_bundle(const BundleInputs& in) {
  const std::string title = in.spec.title.value_or(in.spec.id);
  const std::string id = html_escape(in.spec.id);
  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>" + html_escape(title) + "</title>\n</head>\n<body>\n";
  html += "<figure id=\"" + id + "-figure\">\n";
  html += "<img id=\"" + id + "\" src=\"" + html_escape(in.image_ref) + "\" alt=\"" + html_escape(title) + "\">\n";
  html += "</figure>\n";
  html += "<div id=\"" + id + "-workspace\" tabindex=\"0\" role=\"application\" aria-label=\"" +
          html_escape(title) + ", interactive chart\"></div>\n";
  html += "<div id=\"" + id + "-announce\" aria-live=\"assertive\" aria-atomic=\"true\"></div>\n";
  html += "<script type=\"application/json\" id=\"chartmodal-spec\">\n" + script_safe(in.spec_text) + "\n</script>\n";
  html += "<script>\n" + script_safe(in.runtime_js) + "\n</script>\n";
  html += "</body>\n</html>\n";
  return html;
}

}  // namespace chartmodal::cli
