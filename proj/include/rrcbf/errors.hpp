#pragma once

#include <stdexcept>
#include <string>

namespace rrcbf {

/// Invalid argument outside a function's mathematical domain (z <= 0, bad gains, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Reciprocal term evaluated at or below the singular band h + sigma <= eps.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Bracket expansion found no sign change for a root solve.
class NoRootError : public std::runtime_error {
 public:
  explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario or file configuration rejected by validation.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite derivative or state encountered during integration.
class IntegrationError : public std::runtime_error {
 public:
  explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Plant model inconsistent with its declared structure (relative degree, ...).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rrcbf
