#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace parthom {

/// Subsets of a domain of at most 64 points are bitmasks.
using Mask = std::uint64_t;

inline constexpr std::size_t max_mask_degree = 64;

inline void require_mask_degree(std::size_t n)
{
  if (n == 0 || n > max_mask_degree)
    throw Error(ErrorKind::invalid_argument,
                "subset and partition actions need 1 <= degree <= 64, got " + std::to_string(n));
}

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

inline unsigned lowest_point(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }

inline Mask apply_mask(Mask m, const Permutation &g)
{
  Mask out = 0;
  while (m) {
    unsigned x = lowest_point(m);
    m &= m - 1;
    out |= Mask{1} << g[static_cast<Point>(x)];
  }
  return out;
}

inline std::vector<Point> mask_points(Mask m)
{
  std::vector<Point> points;
  while (m) {
    points.push_back(static_cast<Point>(lowest_point(m)));
    m &= m - 1;
  }
  return points;
}

inline Mask points_mask(const std::vector<Point> &points)
{
  Mask m = 0;
  for (Point p : points)
    m |= Mask{1} << p;
  return m;
}

namespace detail {

inline std::vector<long> parse_int_list(std::string_view text, char sep)
{
  std::vector<long> values;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, sep)) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(ErrorKind::parse, "empty entry in list \"" + std::string(text) + "\"");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != token.size())
      throw Error(ErrorKind::parse, "not an integer: \"" + token + "\"");
    values.push_back(v);
  }
  if (values.empty())
    throw Error(ErrorKind::parse, "empty list");
  return values;
}

} // namespace detail

/// A partition of n: positive parts in non-increasing order.
class IntPartition
{
public:
  IntPartition() = default;

  explicit IntPartition(std::vector<unsigned> parts) : _parts(std::move(parts))
  {
    if (_parts.empty())
      throw Error(ErrorKind::invalid_argument, "a partition needs at least one part");
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] == 0)
        throw Error(ErrorKind::invalid_argument, "partition parts must be positive");
      if (i && _parts[i] > _parts[i - 1])
        throw Error(ErrorKind::invalid_argument,
                    "partition parts must be non-increasing: " + to_string());
      _n += _parts[i];
    }
  }

  /// Sorts arbitrary positive parts into a partition.
  static IntPartition from_unsorted(std::vector<unsigned> parts)
  {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntPartition(std::move(parts));
  }

  /// Parses "3,2,1".
  static IntPartition parse(std::string_view text)
  {
    std::vector<unsigned> parts;
    for (long v : detail::parse_int_list(text, ',')) {
      if (v <= 0)
        throw Error(ErrorKind::parse, "partition parts must be positive: \"" + std::string(text) + "\"");
      parts.push_back(static_cast<unsigned>(v));
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
      throw Error(ErrorKind::parse, "partition parts must be non-increasing: \"" + std::string(text) + "\"");
    return IntPartition(std::move(parts));
  }

  static IntPartition all_ones(unsigned n) { return IntPartition(std::vector<unsigned>(n, 1)); }

  unsigned n() const noexcept { return _n; }
  const std::vector<unsigned> &parts() const noexcept { return _parts; }
  std::size_t num_parts() const noexcept { return _parts.size(); }
  unsigned largest() const { return _parts.front(); }

  bool is_all_ones() const { return _parts.front() == 1; }
  bool is_single_part() const { return _parts.size() == 1; }
  bool is_uniform() const { return _parts.front() == _parts.back(); }

  /// Part size -> multiplicity.
  std::map<unsigned, unsigned> multiplicities() const
  {
    std::map<unsigned, unsigned> r;
    for (unsigned k : _parts)
      ++r[k];
    return r;
  }

  /// Drops the first (largest) part; empty result when there is one part.
  std::vector<unsigned> tail() const { return {_parts.begin() + 1, _parts.end()}; }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < _parts.size(); ++i)
      s += (i ? "," : "") + std::to_string(_parts[i]);
    return s;
  }

  friend bool operator==(const IntPartition &, const IntPartition &) = default;
  friend auto operator<=>(const IntPartition &, const IntPartition &) = default;

private:
  std::vector<unsigned> _parts;
  unsigned _n = 0;
};

namespace detail {

inline void check_cover(std::size_t n, const std::vector<Mask> &blocks)
{
  require_mask_degree(n);
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0)
      throw Error(ErrorKind::invalid_argument, "set partition blocks must be non-empty");
    if (b & seen)
      throw Error(ErrorKind::invalid_argument, "set partition blocks overlap");
    if (b & ~full_mask(n))
      throw Error(ErrorKind::invalid_argument, "set partition block point out of range");
    seen |= b;
  }
  if (seen != full_mask(n))
    throw Error(ErrorKind::invalid_argument, "set partition blocks do not cover the domain");
}

inline std::vector<Mask> parse_blocks(std::string_view text, char open, char close,
                                      std::size_t &degree_out)
{
  auto b = text.find_first_not_of(" \t");
  auto e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != open || text[e] != close)
    throw Error(ErrorKind::parse, std::string("set partition must look like ") + open +
                                    "1,2|3" + close + ": \"" + std::string(text) + "\"");
  std::string_view body = text.substr(b + 1, e - b - 1);
  std::vector<Mask> blocks;
  std::size_t maxpoint = 0;
  std::size_t start = 0;
  for (;;) {
    auto bar = body.find('|', start);
    auto piece = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    Mask m = 0;
    for (long v : parse_int_list(piece, ',')) {
      if (v < 1 || v > 64)
        throw Error(ErrorKind::parse, "set partition point out of range 1..64");
      if (m & (Mask{1} << (v - 1)))
        throw Error(ErrorKind::parse, "repeated point in set partition block");
      m |= Mask{1} << (v - 1);
      maxpoint = std::max<std::size_t>(maxpoint, static_cast<std::size_t>(v));
    }
    blocks.push_back(m);
    if (bar == std::string_view::npos)
      break;
    start = bar + 1;
  }
  degree_out = maxpoint;
  return blocks;
}

inline std::string render_blocks(const std::vector<Mask> &blocks, char open, char close)
{
  std::string s(1, open);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i)
      s += '|';
    auto pts = mask_points(blocks[i]);
    for (std::size_t j = 0; j < pts.size(); ++j)
      s += (j ? "," : "") + std::to_string(pts[j] + 1);
  }
  return s + close;
}

inline IntPartition type_of_blocks(const std::vector<Mask> &blocks)
{
  std::vector<unsigned> sizes;
  for (Mask b : blocks)
    sizes.push_back(popcount(b));
  return IntPartition::from_unsorted(std::move(sizes));
}

} // namespace detail

/// An unordered partition of {0..n-1} (n <= 64). Blocks are stored in
/// canonical order: size descending, then smallest element ascending, so
/// equality and hashing are structural.
class SetPartition
{
public:
  SetPartition() = default;

  SetPartition(std::size_t degree, std::vector<Mask> blocks) : _degree(degree), _blocks(std::move(blocks))
  {
    detail::check_cover(degree, _blocks);
    canonicalize();
  }

  /// From 0-based blocks.
  static SetPartition from_blocks(std::size_t degree, const std::vector<std::vector<Point>> &blocks)
  {
    std::vector<Mask> masks;
    for (const auto &b : blocks) {
      Mask m = points_mask(b);
      if (popcount(m) != b.size())
        throw Error(ErrorKind::invalid_argument, "repeated point in set partition block");
      masks.push_back(m);
    }
    return SetPartition(degree, std::move(masks));
  }

  /// Parses "{1,2|3,4|5}"; the degree is the largest point mentioned.
  static SetPartition parse(std::string_view text)
  {
    std::size_t degree = 0;
    auto blocks = detail::parse_blocks(text, '{', '}', degree);
    return SetPartition(degree, std::move(blocks));
  }

  /// The canonical first partition of the given type: consecutive runs.
  static SetPartition first_of_type(const IntPartition &lambda)
  {
    std::vector<Mask> blocks;
    unsigned at = 0;
    for (unsigned k : lambda.parts()) {
      blocks.push_back(full_mask(at + k) & ~full_mask(at));
      at += k;
    }
    return SetPartition(lambda.n(), std::move(blocks));
  }

  static SetPartition discrete(std::size_t degree)
  {
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < degree; ++i)
      blocks.push_back(Mask{1} << i);
    return SetPartition(degree, std::move(blocks));
  }

  std::size_t degree() const noexcept { return _degree; }
  const std::vector<Mask> &masks() const noexcept { return _blocks; }
  std::size_t num_blocks() const noexcept { return _blocks.size(); }

  std::vector<std::vector<Point>> blocks() const
  {
    std::vector<std::vector<Point>> out;
    for (Mask b : _blocks)
      out.push_back(mask_points(b));
    return out;
  }

  IntPartition type() const { return detail::type_of_blocks(_blocks); }

  /// Index of the block containing x.
  std::size_t block_of(Point x) const
  {
    for (std::size_t i = 0; i < _blocks.size(); ++i)
      if (_blocks[i] & (Mask{1} << x))
        return i;
    throw Error(ErrorKind::invalid_argument, "point outside the partition's domain");
  }

  SetPartition apply(const Permutation &g) const
  {
    if (g.degree() != _degree)
      throw Error(ErrorKind::degree_mismatch, "permutation and partition degrees differ");
    SetPartition out;
    out._degree = _degree;
    out._blocks.reserve(_blocks.size());
    for (Mask b : _blocks)
      out._blocks.push_back(apply_mask(b, g));
    out.canonicalize();
    return out;
  }

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition &coarser) const
  {
    if (coarser._degree != _degree)
      throw Error(ErrorKind::degree_mismatch, "partitions of different degrees");
    for (Mask b : _blocks) {
      bool inside = false;
      for (Mask c : coarser._blocks)
        if ((b & c) == b) {
          inside = true;
          break;
        }
      if (!inside)
        return false;
    }
    return true;
  }

  std::string to_string() const { return detail::render_blocks(_blocks, '{', '}'); }

  std::uint64_t hash() const noexcept
  {
    std::uint64_t h = _degree;
    for (Mask b : _blocks)
      h = hash_mix(h, b);
    return h;
  }

  friend bool operator==(const SetPartition &, const SetPartition &) = default;
  friend auto operator<=>(const SetPartition &, const SetPartition &) = default;

private:
  void canonicalize()
  {
    std::sort(_blocks.begin(), _blocks.end(), [](Mask a, Mask b) {
      unsigned pa = popcount(a), pb = popcount(b);
      if (pa != pb)
        return pa > pb;
      return lowest_point(a) < lowest_point(b);
    });
  }

  std::size_t _degree = 0;
  std::vector<Mask> _blocks;
};

/// An ordered partition (A_1, A_2, ...) with |A_1| >= |A_2| >= ...; blocks
/// of equal size keep their order.
class OrderedSetPartition
{
public:
  OrderedSetPartition() = default;

  OrderedSetPartition(std::size_t degree, std::vector<Mask> blocks)
    : _degree(degree), _blocks(std::move(blocks))
  {
    detail::check_cover(degree, _blocks);
    for (std::size_t i = 1; i < _blocks.size(); ++i)
      if (popcount(_blocks[i]) > popcount(_blocks[i - 1]))
        throw Error(ErrorKind::invalid_argument, "ordered partition block sizes must be non-increasing");
  }

  /// Parses "[1,2|3,4|5]".
  static OrderedSetPartition parse(std::string_view text)
  {
    std::size_t degree = 0;
    auto blocks = detail::parse_blocks(text, '[', ']', degree);
    return OrderedSetPartition(degree, std::move(blocks));
  }

  static OrderedSetPartition first_of_type(const IntPartition &lambda)
  {
    auto unordered = SetPartition::first_of_type(lambda);
    return OrderedSetPartition(lambda.n(), unordered.masks());
  }

  std::size_t degree() const noexcept { return _degree; }
  const std::vector<Mask> &masks() const noexcept { return _blocks; }
  IntPartition type() const { return detail::type_of_blocks(_blocks); }

  OrderedSetPartition apply(const Permutation &g) const
  {
    if (g.degree() != _degree)
      throw Error(ErrorKind::degree_mismatch, "permutation and partition degrees differ");
    OrderedSetPartition out;
    out._degree = _degree;
    out._blocks.reserve(_blocks.size());
    for (Mask b : _blocks)
      out._blocks.push_back(apply_mask(b, g));
    return out;
  }

  SetPartition unordered() const { return SetPartition(_degree, _blocks); }

  std::string to_string() const { return detail::render_blocks(_blocks, '[', ']'); }

  std::uint64_t hash() const noexcept
  {
    std::uint64_t h = _degree ^ 0x51ed27;
    for (Mask b : _blocks)
      h = hash_mix(h, b);
    return h;
  }

  friend bool operator==(const OrderedSetPartition &, const OrderedSetPartition &) = default;
  friend auto operator<=>(const OrderedSetPartition &, const OrderedSetPartition &) = default;

private:
  std::size_t _degree = 0;
  std::vector<Mask> _blocks;
};

inline IntPartition type_of(const SetPartition &p) { return p.type(); }
inline IntPartition type_of(const OrderedSetPartition &p) { return p.type(); }
inline SetPartition apply(const SetPartition &p, const Permutation &g) { return p.apply(g); }
inline OrderedSetPartition apply(const OrderedSetPartition &p, const Permutation &g) { return p.apply(g); }
inline bool refines(const SetPartition &p, const SetPartition &q) { return p.refines(q); }

/// n! / prod_k (k!)^{r_k} r_k!  with r_k the multiplicity of part k.
inline BigInt count_unordered(const IntPartition &lambda)
{
  BigInt denom = 1;
  for (auto [k, r] : lambda.multiplicities()) {
    BigInt kf = factorial(k);
    for (unsigned i = 0; i < r; ++i)
      denom *= kf;
    denom *= factorial(r);
  }
  return factorial(lambda.n()) / denom;
}

/// n! / prod_i k_i!
inline BigInt count_ordered(const IntPartition &lambda)
{
  BigInt denom = 1;
  for (unsigned k : lambda.parts())
    denom *= factorial(k);
  return factorial(lambda.n()) / denom;
}

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<IntPartition> integer_partitions(unsigned n)
{
  if (n == 0)
    throw Error(ErrorKind::invalid_argument, "integer_partitions needs n >= 1");
  std::vector<IntPartition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace detail {

/// Calls f(subset) for every k-element subset of `pool` that contains
/// `forced` (forced must be inside pool). Returns false if f asked to stop.
template <class F>
bool for_each_subset(Mask pool, unsigned k, Mask chosen, F &f)
{
  if (k == 0)
    return f(chosen);
  if (popcount(pool) < k)
    return true;
  unsigned x = lowest_point(pool);
  Mask rest = pool & (pool - 1);
  if (!for_each_subset(rest, k - 1, chosen | (Mask{1} << x), f))
    return false;
  return for_each_subset(rest, k, chosen, f);
}

} // namespace detail

/// Streams every set partition of {0..n-1} of type lambda exactly once.
/// Unordered partitions are produced in canonical form; ordered ones with
/// block i of size lambda_i. Returns the number streamed. The visitor
/// receives `const SetPartition&` or `const OrderedSetPartition&`.
template <class Visitor>
std::uint64_t for_each_unordered_of_type(const IntPartition &lambda, Visitor &&visit,
                                         std::uint64_t cap = defaults::orbit_cap)
{
  require_mask_degree(lambda.n());
  std::map<unsigned, unsigned> remaining = lambda.multiplicities();
  std::vector<Mask> blocks;
  std::uint64_t count = 0;
  std::size_t n = lambda.n();

  std::function<void(Mask)> rec = [&](Mask unassigned) {
    if (unassigned == 0) {
      if (++count > cap)
        throw CapExceeded("partition enumeration truncated", cap);
      visit(SetPartition(n, blocks));
      return;
    }
    unsigned x = lowest_point(unassigned);
    Mask others = unassigned & ~(Mask{1} << x);
    for (auto &[k, r] : remaining) {
      if (r == 0)
        continue;
      --r;
      auto pick = [&](Mask chosen) {
        blocks.push_back(chosen);
        rec(unassigned & ~chosen);
        blocks.pop_back();
        return true;
      };
      detail::for_each_subset(others, k - 1, Mask{1} << x, pick);
      ++r;
    }
  };
  rec(full_mask(n));
  return count;
}

template <class Visitor>
std::uint64_t for_each_ordered_of_type(const IntPartition &lambda, Visitor &&visit,
                                       std::uint64_t cap = defaults::orbit_cap)
{
  require_mask_degree(lambda.n());
  std::vector<Mask> blocks;
  std::uint64_t count = 0;
  std::size_t n = lambda.n();
  const auto &parts = lambda.parts();

  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask unassigned) {
    if (i == parts.size()) {
      if (++count > cap)
        throw CapExceeded("partition enumeration truncated", cap);
      visit(OrderedSetPartition(n, blocks));
      return;
    }
    auto pick = [&](Mask chosen) {
      blocks.push_back(chosen);
      rec(i + 1, unassigned & ~chosen);
      blocks.pop_back();
      return true;
    };
    detail::for_each_subset(unassigned, parts[i], 0, pick);
  };
  rec(0, full_mask(n));
  return count;
}

inline std::vector<SetPartition> enumerate_unordered_of_type(const IntPartition &lambda,
                                                             std::uint64_t cap = defaults::enumeration_cap)
{
  std::vector<SetPartition> out;
  for_each_unordered_of_type(lambda, [&](const SetPartition &p) { out.push_back(p); }, cap);
  return out;
}

inline std::vector<OrderedSetPartition> enumerate_ordered_of_type(const IntPartition &lambda,
                                                                  std::uint64_t cap = defaults::enumeration_cap)
{
  std::vector<OrderedSetPartition> out;
  for_each_ordered_of_type(lambda, [&](const OrderedSetPartition &p) { out.push_back(p); }, cap);
  return out;
}

/// Can the parts of `finer` be grouped so the group sums are exactly the
/// parts of `coarser`? Equivalently: is there g in S_n with K_a g refining
/// K_b for kernels of these types.
inline bool coarsening_feasible(const IntPartition &finer, const IntPartition &coarser)
{
  if (finer.n() != coarser.n())
    throw Error(ErrorKind::invalid_argument, "coarsening_feasible needs partitions of the same n (" +
                                               std::to_string(finer.n()) + " vs " +
                                               std::to_string(coarser.n()) + ")");
  if (finer.num_parts() < coarser.num_parts())
    return false;
  const auto &items = finer.parts(); // descending
  std::vector<unsigned> bins = coarser.parts();
  std::set<std::pair<std::size_t, std::vector<unsigned>>> dead;

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == items.size())
      return true; // sums agree, so every bin is exactly full
    std::vector<unsigned> key = bins;
    std::sort(key.begin(), key.end(), std::greater<>());
    if (key.front() < items[i])
      return false;
    if (dead.count({i, key}))
      return false;
    unsigned last_tried = 0;
    std::vector<std::size_t> order(bins.size());
    for (std::size_t j = 0; j < bins.size(); ++j)
      order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bins[a] > bins[b]; });
    for (std::size_t j : order) {
      if (bins[j] < items[i] || bins[j] == last_tried)
        continue;
      last_tried = bins[j];
      bins[j] -= items[i];
      bool ok = place(i + 1);
      bins[j] += items[i];
      if (ok)
        return true;
    }
    dead.insert({i, std::move(key)});
    return false;
  };
  return place(0);
}

struct SetPartitionHash
{
  std::size_t operator()(const SetPartition &p) const noexcept { return p.hash(); }
};

struct OrderedSetPartitionHash
{
  std::size_t operator()(const OrderedSetPartition &p) const noexcept { return p.hash(); }
};

} // namespace parthom
