#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace parthom {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n)
{
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i)
    result *= i;
  return result;
}

inline BigInt binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// n (n-1) ... (n-t+1)
inline BigInt falling_factorial(unsigned n, unsigned t)
{
  BigInt result = 1;
  for (unsigned i = 0; i < t && i < n; ++i)
    result *= n - i;
  return t > n ? BigInt(0) : result;
}

inline std::optional<std::uint64_t> to_u64(const BigInt &value)
{
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max())
    return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

inline std::string to_string(const BigInt &value) { return value.str(); }

} // namespace parthom
