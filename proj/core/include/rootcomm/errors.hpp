// Error taxonomy shared across the library: configuration problems versus
// numeric failures detected during integration.
#pragma once

#include <stdexcept>
#include <string>

namespace rootcomm {

// Bad config file, unknown key, out-of-range or inconsistent parameter.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Integration blew up (NaN, runaway negative pool, unstable step).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rootcomm
