#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

/// Base class for all failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& what) : Error(what) {}
};

struct SetTooLarge : Error {
  explicit SetTooLarge(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct NotIntegral : Error {
  explicit NotIntegral(const std::string& what) : Error(what) {}
};

struct DegreeExceeded : Error {
  explicit DegreeExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct CacheError : Error {
  explicit CacheError(const std::string& what) : Error(what) {}
};

}  // namespace burnside
