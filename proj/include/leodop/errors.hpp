#pragma once

#include <stdexcept>
#include <string>

namespace leodop {

// Violation of a numeric-domain precondition (e.g. an angle outside the
// visibility range, a negative radicand beyond round-off). CLI exit code 4.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent run configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace leodop
