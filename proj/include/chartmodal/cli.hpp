#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chartmodal/chart_spec.hpp"
#include "chartmodal/config.hpp"

namespace chartmodal::cli {

/// Process context a command runs in. Tests substitute their own.
struct Environment {
  EnvLookup getenv;
  std::filesystem::path cwd;
  std::filesystem::path exe_dir;  // directory of the running binary, may be empty

  static Environment from_process(const char* argv0);
};

inline constexpr std::string_view kRuntimeEnvVar = "CHARTMODAL_RUNTIME";

/// Finds the browser runtime script: explicit path, then $CHARTMODAL_RUNTIME,
/// then web-runtime/dist/runtime.js under the working directory and its
/// parents, then next to the binary. Throws MissingRuntimeAsset.
std::filesystem::path locate_runtime(const std::optional<std::filesystem::path>& explicit_path,
                                     const Environment& env);

struct BundleInputs {
  std::string spec_text;  // embedded verbatim
  ChartSpec spec;
  std::string image_ref;  // relative path or data: URI
  std::string runtime_js;
};

std::string make_bundle(const BundleInputs& in);

std::string base64_encode(std::string_view bytes);

/// "image/png" for "plot.png", ...; "application/octet-stream" when unknown.
std::string image_mime_type(const std::filesystem::path& image);

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env);

}  // namespace chartmodal::cli
