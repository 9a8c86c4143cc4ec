#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "partitions.hpp"
#include "permutation.hpp"

namespace parthom {

/// An arbitrary self-map of {0..n-1}, acting on the right like Permutation:
/// x(ab) = (xa)b.
class Transformation
{
public:
  Transformation() = default;

  explicit Transformation(std::vector<Point> images) : _images(std::move(images))
  {
    if (_images.empty())
      throw Error(ErrorKind::invalid_argument, "a transformation needs degree >= 1");
    if (_images.size() > max_degree)
      throw Error(ErrorKind::invalid_argument, "transformation degree too large");
    for (Point y : _images)
      if (y >= _images.size())
        throw Error(ErrorKind::invalid_argument, "transformation image " + std::to_string(y + 1) + " out of range");
  }

  explicit Transformation(const Permutation &p) : _images(p.images()) {}

  static Transformation identity(std::size_t degree)
  {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<Point>(i);
    return Transformation(std::move(images));
  }

  static Transformation constant(std::size_t degree, Point value)
  {
    return Transformation(std::vector<Point>(degree, value));
  }

  /// Parses 1-based images, e.g. "1,1,3,4,5".
  static Transformation parse(std::string_view text)
  {
    auto values = detail::parse_int_list(text, ',');
    std::vector<Point> images;
    for (long v : values) {
      if (v < 1 || v > static_cast<long>(values.size()))
        throw Error(ErrorKind::parse, "map image " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(values.size()) + " in \"" + std::string(text) + "\"");
      images.push_back(static_cast<Point>(v - 1));
    }
    return Transformation(std::move(images));
  }

  std::size_t degree() const noexcept { return _images.size(); }
  const std::vector<Point> &images() const noexcept { return _images; }
  Point operator[](Point x) const noexcept { return _images[x]; }

  Transformation operator*(const Transformation &rhs) const
  {
    if (degree() != rhs.degree())
      throw Error(ErrorKind::degree_mismatch, "cannot compose maps of degree " + std::to_string(degree()) +
                                                 " and " + std::to_string(rhs.degree()));
    std::vector<Point> out(_images.size());
    for (std::size_t x = 0; x < _images.size(); ++x)
      out[x] = rhs._images[_images[x]];
    Transformation t;
    t._images = std::move(out);
    return t;
  }

  std::vector<Point> image() const
  {
    std::vector<bool> seen(degree(), false);
    for (Point y : _images)
      seen[y] = true;
    std::vector<Point> out;
    for (std::size_t y = 0; y < seen.size(); ++y)
      if (seen[y])
        out.push_back(static_cast<Point>(y));
    return out;
  }

  std::size_t rank() const { return image().size(); }
  bool is_bijective() const { return rank() == degree(); }
  bool is_idempotent() const { return *this * *this == *this; }

  /// Kernel classes labelled 0,1,2,... in order of first appearance; two
  /// maps have equal kernels iff these vectors are equal.
  std::vector<Point> kernel_labels() const
  {
    std::vector<std::int32_t> label(degree(), -1);
    std::vector<Point> out(degree());
    Point next = 0;
    for (std::size_t x = 0; x < degree(); ++x) {
      auto &l = label[_images[x]];
      if (l < 0)
        l = next++;
      out[x] = static_cast<Point>(l);
    }
    return out;
  }

  SetPartition kernel() const
  {
    std::vector<std::vector<Point>> fibers(degree());
    for (std::size_t x = 0; x < degree(); ++x)
      fibers[_images[x]].push_back(static_cast<Point>(x));
    std::vector<std::vector<Point>> blocks;
    for (auto &f : fibers)
      if (!f.empty())
        blocks.push_back(std::move(f));
    return SetPartition::from_blocks(degree(), blocks);
  }

  IntPartition kernel_type() const
  {
    std::vector<unsigned> sizes(degree(), 0);
    for (Point y : _images)
      ++sizes[y];
    std::vector<unsigned> parts;
    for (unsigned s : sizes)
      if (s)
        parts.push_back(s);
    return IntPartition::from_unsorted(std::move(parts));
  }

  bool is_constant() const { return rank() == 1; }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < _images.size(); ++i)
      s += (i ? "," : "") + std::to_string(_images[i] + 1);
    return s;
  }

  std::uint64_t hash() const noexcept
  {
    std::uint64_t h = _images.size();
    for (Point x : _images)
      h = hash_mix(h, x);
    return h;
  }

  friend bool operator==(const Transformation &, const Transformation &) = default;
  friend auto operator<=>(const Transformation &, const Transformation &) = default;

private:
  std::vector<Point> _images;
};

inline Transformation operator*(const Transformation &a, const Permutation &g) { return a * Transformation(g); }
inline Transformation operator*(const Permutation &g, const Transformation &a) { return Transformation(g) * a; }

struct TransformationHash
{
  std::size_t operator()(const Transformation &t) const noexcept { return t.hash(); }
};

/// A representative map whose kernel has type lambda: the i-th block of the
/// canonical first partition of that type goes to its smallest point.
inline Transformation map_of_kernel_type(const IntPartition &lambda)
{
  std::vector<Point> images(lambda.n());
  unsigned at = 0;
  for (unsigned k : lambda.parts()) {
    for (unsigned i = 0; i < k; ++i)
      images[at + i] = static_cast<Point>(at);
    at += k;
  }
  return Transformation(std::move(images));
}

/// Every self-map of {0..n-1} in lexicographic order of image arrays.
template <class Visitor>
void for_each_transformation(std::size_t degree, Visitor &&visit)
{
  std::vector<Point> images(degree, 0);
  while (true) {
    visit(Transformation(images));
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++images[i] < degree)
        break;
      images[i] = 0;
      if (i == 0)
        return;
    }
  }
}

} // namespace parthom

template <>
struct std::hash<parthom::Transformation>
{
  std::size_t operator()(const parthom::Transformation &t) const noexcept { return t.hash(); }
};
