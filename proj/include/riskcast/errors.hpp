#pragma once

#include <stdexcept>
#include <string>

namespace riskcast {

// Configuration problems (bad or inconsistent settings). CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Data problems (missing history, malformed files, shape mismatches). CLI maps these to exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riskcast
