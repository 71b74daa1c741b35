#pragma once

#include <stdexcept>
#include <string>

namespace seasonload {

/// Bad invocation or configuration (CLI exit code 1).
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Unusable or degenerate input data (CLI exit code 2).
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (CLI exit code 3).
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace seasonload
