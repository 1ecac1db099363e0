#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace chartmodal {

// Every failure the engine reports derives from ChartError so the CLI can map
// them to exit codes in one place.
class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define CHARTMODAL_ERROR(Name)                                   \
  class Name : public ChartError {                               \
   public:                                                       \
    using ChartError::ChartError;                                \
    const char* kind() const noexcept override { return #Name; } \
  }

CHARTMODAL_ERROR(MalformedDocument);
CHARTMODAL_ERROR(UnknownPlotType);
CHARTMODAL_ERROR(DomainError);
CHARTMODAL_ERROR(WidthTooSmall);
CHARTMODAL_ERROR(InvalidCursor);
CHARTMODAL_ERROR(InvalidDirection);
CHARTMODAL_ERROR(MissingRuntimeAsset);
CHARTMODAL_ERROR(IoError);

#undef CHARTMODAL_ERROR

/// A document that parsed but broke a schema rule. `path` names the offending
/// field in the document, e.g. "data[0]" or "axes.x.level".
class SchemaViolation : public ChartError {
 public:
  SchemaViolation(std::string path, const std::string& message)
      : ChartError(path + ": " + message), path_(std::move(path)) {}
  const char* kind() const noexcept override { return "SchemaViolation"; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Raised when a recorded log disagrees with the recomputed session.
class ReplayMismatch : public ChartError {
 public:
  ReplayMismatch(std::size_t record, const std::string& message)
      : ChartError("record " + std::to_string(record) + ": " + message), record_(record) {}
  const char* kind() const noexcept override { return "ReplayMismatch"; }
  std::size_t record() const noexcept { return record_; }

 private:
  std::size_t record_;
};

}  // namespace chartmodal
