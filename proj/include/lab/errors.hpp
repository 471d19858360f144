#pragma once

#include <stdexcept>
#include <string>

namespace lab {

/// Invalid argument to an operation (bad level, nonpositive horizon, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed (singular solve, Newton divergence,
/// degenerate Jacobian). Carries the simulation time where it happened.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double t)
      : std::runtime_error(what + " (t=" + std::to_string(t) + ")"), time_(t) {}
  double time() const noexcept { return time_; }

private:
  double time_;
};

/// A path or grid does not resolve the requested scale; the message says
/// how much refinement is needed.
class ResolutionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Experiment configuration failed validation; carries the offending
/// field path (e.g. "params.lambda").
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error("config field '" + field + "': " + what),
        field_(field) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

} // namespace lab
