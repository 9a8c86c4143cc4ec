#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace parthom {

/// Points are 0-based internally; every textual interface is 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t max_degree = 65535;

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v)
{
  // splitmix-style avalanche
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

/// A bijection of {0..n-1}. Points act on the right:
/// x * (p * q) == (x * p) * q, so `p * q` means "apply p, then q".
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : _images(degree)
  {
    if (degree == 0 || degree > max_degree)
      throw Error(ErrorKind::invalid_argument, "permutation degree must be in 1..65535");
    std::iota(_images.begin(), _images.end(), Point{0});
  }

  /// From 0-based images; throws unless the images form a bijection.
  static Permutation from_images(std::vector<Point> images)
  {
    if (images.empty() || images.size() > max_degree)
      throw Error(ErrorKind::invalid_argument, "permutation degree must be in 1..65535");
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw Error(ErrorKind::invalid_argument, "images do not form a bijection");
      seen[x] = true;
    }
    Permutation p;
    p._images = std::move(images);
    return p;
  }

  static Permutation from_one_based(std::span<const long> images)
  {
    std::vector<Point> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > static_cast<long>(images.size()))
        throw Error(ErrorKind::invalid_argument,
                    "image " + std::to_string(images[i]) + " out of range 1.." +
                      std::to_string(images.size()));
      zero[i] = static_cast<Point>(images[i] - 1);
    }
    return from_images(std::move(zero));
  }

  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)"; commas between
  /// points are accepted. "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text)
  {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != '(')
        throw Error(ErrorKind::parse, "expected '(' in cycle notation: " + std::string(text));
      ++pos;
      std::vector<Point> cycle;
      for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (start == pos)
          throw Error(ErrorKind::parse, "malformed cycle notation: " + std::string(text));
        unsigned long value = std::stoul(std::string(text.substr(start, pos - start)));
        if (value < 1 || value > degree)
          throw Error(ErrorKind::parse, "point " + std::to_string(value) +
                                          " out of range in cycle notation");
        Point x = static_cast<Point>(value - 1);
        if (used[x])
          throw Error(ErrorKind::parse, "point " + std::to_string(value) +
                                          " repeated in cycle notation");
        used[x] = true;
        cycle.push_back(x);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_ws();
    }
    return p;
  }

  std::size_t degree() const noexcept { return _images.size(); }
  const std::vector<Point> &images() const noexcept { return _images; }

  Point operator[](Point x) const noexcept { return _images[x]; }

  Permutation operator*(const Permutation &rhs) const
  {
    if (degree() != rhs.degree())
      throw Error(ErrorKind::degree_mismatch,
                  "cannot compose permutations of degree " + std::to_string(degree()) +
                    " and " + std::to_string(rhs.degree()));
    Permutation result;
    result._images.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x)
      result._images[x] = rhs._images[_images[x]];
    return result;
  }

  Permutation inverse() const
  {
    Permutation result;
    result._images.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x)
      result._images[_images[x]] = static_cast<Point>(x);
    return result;
  }

  bool is_identity() const noexcept
  {
    for (std::size_t x = 0; x < degree(); ++x)
      if (_images[x] != x)
        return false;
    return true;
  }

  /// Smallest moved point, or degree() if this is the identity.
  std::size_t first_moved_point() const noexcept
  {
    for (std::size_t x = 0; x < degree(); ++x)
      if (_images[x] != x)
        return x;
    return degree();
  }

  /// Extends to a larger degree by fixing the new points.
  Permutation extended(std::size_t new_degree) const
  {
    if (new_degree < degree())
      throw Error(ErrorKind::invalid_argument, "cannot shrink a permutation");
    Permutation result(new_degree);
    std::copy(_images.begin(), _images.end(), result._images.begin());
    return result;
  }

  std::string to_cycle_string() const
  {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t x = 0; x < degree(); ++x) {
      if (seen[x] || _images[x] == x)
        continue;
      out << '(';
      std::size_t y = x;
      bool first = true;
      do {
        if (!first)
          out << ' ';
        first = false;
        out << y + 1;
        seen[y] = true;
        y = _images[y];
      } while (y != x);
      out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
  }

  /// Space-separated 1-based images, the `img:` form of the group file.
  std::string to_image_string() const
  {
    std::ostringstream out;
    for (std::size_t x = 0; x < degree(); ++x)
      out << (x ? " " : "") << _images[x] + 1;
    return out.str();
  }

  std::uint64_t hash() const noexcept
  {
    std::uint64_t h = degree();
    for (Point x : _images)
      h = hash_mix(h, x);
    return h;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> _images;
};

inline Permutation compose(const Permutation &p, const Permutation &q) { return p * q; }

inline Permutation inverse(const Permutation &p) { return p.inverse(); }

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

} // namespace parthom

template <>
struct std::hash<parthom::Permutation>
{
  std::size_t operator()(const parthom::Permutation &p) const noexcept { return p.hash(); }
};
