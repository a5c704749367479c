#pragma once

#include <stdexcept>
#include <string>

namespace rhig {

/// Bad arguments, inconsistent dimensions, invalid configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine failed to converge or produced an invalid result.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rhig
