#pragma once

#include <stdexcept>
#include <string>

namespace parthom {

enum class ErrorKind {
  invalid_argument,
  degree_mismatch,
  parse,
  cap_exceeded,
  validation,
  internal,
};

inline const char *to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::invalid_argument: return "invalid-argument";
  case ErrorKind::degree_mismatch: return "degree-mismatch";
  case ErrorKind::parse: return "parse-error";
  case ErrorKind::cap_exceeded: return "cap-exceeded";
  case ErrorKind::validation: return "validation-failure";
  case ErrorKind::internal: return "internal-error";
  }
  return "unknown";
}

/// The single exception type thrown by the library; `kind()` tells callers
/// (the CLI in particular) which class of failure occurred.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(what), _kind(kind)
  {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

/// Thrown when an orbit, enumeration or closure grows past its cap. The
/// partial result is discarded: a truncated orbit is not an orbit.
class CapExceeded : public Error
{
public:
  CapExceeded(const std::string &what, std::size_t cap)
    : Error(ErrorKind::cap_exceeded, what + " (cap " + std::to_string(cap) + ")"),
      _cap(cap)
  {}

  std::size_t cap() const noexcept { return _cap; }

private:
  std::size_t _cap;
};

namespace defaults {
inline constexpr std::size_t orbit_cap = 10'000'000;
inline constexpr std::size_t enumeration_cap = 1'000'000;
inline constexpr std::size_t closure_cap = 1'000'000;
// Injective tuple orbits longer than this are measured on a stabilizer chain.
inline constexpr std::size_t tuple_bfs_limit = 1'000'000;
} // namespace defaults

} // namespace parthom
