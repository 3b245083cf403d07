#pragma once

#include <stdexcept>
#include <string>

namespace care {

// Base for all harness errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Template rendering / placeholder problems.
struct TemplateError : Error {
  using Error::Error;
};

// Domain-type invariant violations (bad TaskSpec, bad Study, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Bad user-supplied configuration.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed curation manifest (missing labels, bad flags, duplicate ids).
struct ManifestSchemaError : Error {
  using Error::Error;
};

// Mismatched or unusable inputs to stats operations.
struct InputError : Error {
  using Error::Error;
};

// A metric with a zero denominator; reported explicitly, never silently 0.
struct UndefinedMetricError : Error {
  using Error::Error;
};

}  // namespace care
