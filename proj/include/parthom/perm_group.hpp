#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace parthom {

/// One level of a stabilizer chain: the basic orbit of `base_point` under
/// `generators`, with a coset representative for every orbit point.
struct StabilizerLevel
{
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> rep_index; // point -> index into transversal, or -1
  std::vector<Permutation> transversal; // base_point * transversal[i] == orbit[i]
  std::vector<Permutation> inverse_transversal;

  bool in_orbit(Point x) const { return rep_index[x] >= 0; }
};

class StabilizerChain
{
public:
  explicit StabilizerChain(std::size_t degree = 1) : _degree(degree) {}

  std::size_t degree() const noexcept { return _degree; }
  const std::vector<StabilizerLevel> &levels() const noexcept { return _levels; }

  std::vector<Point> base() const
  {
    std::vector<Point> b;
    for (const auto &level : _levels)
      b.push_back(level.base_point);
    return b;
  }

  BigInt order() const
  {
    BigInt result = 1;
    for (const auto &level : _levels)
      result *= level.orbit.size();
    return result;
  }

  /// Strips `p` through levels [start, end). Returns the residue and the
  /// level at which sifting stopped (levels().size() if it went through).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t start = 0) const
  {
    for (std::size_t l = start; l < _levels.size(); ++l) {
      const auto &level = _levels[l];
      Point y = p[level.base_point];
      if (!level.in_orbit(y))
        return {std::move(p), l};
      p = p * level.inverse_transversal[level.rep_index[y]];
    }
    return {std::move(p), _levels.size()};
  }

  bool contains(const Permutation &p) const
  {
    if (p.degree() != _degree)
      return false;
    auto [residue, level] = sift(p);
    return level == _levels.size() && residue.is_identity();
  }

private:
  friend StabilizerChain schreier_sims(std::size_t, const std::vector<Permutation> &,
                                       std::span<const Point>);

  void rebuild_orbit(std::size_t l)
  {
    auto &level = _levels[l];
    level.orbit.assign(1, level.base_point);
    level.rep_index.assign(_degree, -1);
    level.transversal.assign(1, Permutation(_degree));
    level.inverse_transversal.assign(1, Permutation(_degree));
    level.rep_index[level.base_point] = 0;
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      Point y = level.orbit[i];
      for (const auto &s : level.generators) {
        Point z = s[y];
        if (level.rep_index[z] >= 0)
          continue;
        level.rep_index[z] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(z);
        level.transversal.push_back(level.transversal[i] * s);
        level.inverse_transversal.push_back(level.transversal.back().inverse());
      }
    }
  }

  std::size_t _degree;
  std::vector<StabilizerLevel> _levels;
};

/// Deterministic Schreier-Sims. The base starts with `base_prefix` (in that
/// order) and is extended by the smallest point moved by whichever
/// generator first fixes the current base.
inline StabilizerChain schreier_sims(std::size_t degree, const std::vector<Permutation> &generators,
                                     std::span<const Point> base_prefix = {})
{
  StabilizerChain chain(degree);
  auto &levels = chain._levels;

  std::vector<Permutation> gens;
  {
    std::unordered_set<Permutation> seen;
    for (const auto &g : generators) {
      if (g.degree() != degree)
        throw Error(ErrorKind::degree_mismatch, "generator degree differs from group degree");
      if (!g.is_identity() && seen.insert(g).second)
        gens.push_back(g);
    }
  }

  auto fixes_base = [&](const Permutation &g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels[l].base_point] != levels[l].base_point)
        return false;
    return true;
  };
  auto push_level = [&](Point b) {
    StabilizerLevel level;
    level.base_point = b;
    levels.push_back(std::move(level));
  };

  for (Point b : base_prefix) {
    if (b >= degree)
      throw Error(ErrorKind::invalid_argument, "base point out of range");
    push_level(b);
  }
  for (const auto &g : gens)
    if (fixes_base(g, levels.size()))
      push_level(static_cast<Point>(g.first_moved_point()));

  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto &g : gens)
      if (fixes_base(g, l))
        levels[l].generators.push_back(g);
    chain.rebuild_orbit(l);
  }

  // Returns true if a new strong generator was added (and `i` moved).
  auto process_level = [&](std::ptrdiff_t &i) {
    std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels[li].orbit.size(); ++oi) {
      for (std::size_t si = 0; si < levels[li].generators.size(); ++si) {
        const auto &level = levels[li];
        Point y = level.orbit[oi];
        const auto &s = level.generators[si];
        Point ys = s[y];
        Permutation h = level.transversal[oi] * s * level.inverse_transversal[level.rep_index[ys]];
        if (h.is_identity())
          continue;
        auto [residue, drop] = chain.sift(std::move(h), li + 1);
        if (drop == levels.size()) {
          if (residue.is_identity())
            continue;
          push_level(static_cast<Point>(residue.first_moved_point()));
        }
        for (std::size_t l = li + 1; l <= drop; ++l) {
          levels[l].generators.push_back(residue);
          chain.rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        return true;
      }
    }
    return false;
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    if (!process_level(i))
      --i;
  }
  return chain;
}

/// A permutation group given by generators. The stabilizer chain is built
/// on first use and shared (read-only) between copies.
class PermGroup
{
public:
  PermGroup() : PermGroup(1, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {})
    : _degree(degree), _generators(std::move(generators)), _name(std::move(name)),
      _cache(std::make_shared<Cache>())
  {
    if (degree == 0)
      throw Error(ErrorKind::invalid_argument, "group degree must be positive");
    for (const auto &g : _generators)
      if (g.degree() != degree)
        throw Error(ErrorKind::degree_mismatch,
                    "generator of degree " + std::to_string(g.degree()) +
                      " in a group of degree " + std::to_string(degree));
    if (_generators.empty())
      _generators.emplace_back(degree);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}, "1"); }

  std::size_t degree() const noexcept { return _degree; }
  const std::vector<Permutation> &generators() const noexcept { return _generators; }
  const std::string &name() const noexcept { return _name; }
  void set_name(std::string name) { _name = std::move(name); }

  const StabilizerChain &chain() const
  {
    std::call_once(_cache->once, [this] {
      _cache->chain = std::make_unique<StabilizerChain>(schreier_sims(_degree, _generators));
    });
    return *_cache->chain;
  }

  BigInt order() const { return chain().order(); }

  bool contains(const Permutation &p) const { return chain().contains(p); }

  std::vector<Point> point_orbit(Point x) const
  {
    std::vector<Point> orbit{x};
    std::vector<bool> seen(_degree, false);
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &g : _generators) {
        Point y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    return orbit;
  }

  bool is_transitive() const { return point_orbit(0).size() == _degree; }

  /// True when both groups have the same elements.
  bool same_group(const PermGroup &other) const
  {
    if (_degree != other._degree || order() != other.order())
      return false;
    for (const auto &g : other._generators)
      if (!contains(g))
        return false;
    return true;
  }

  bool is_subgroup_of(const PermGroup &other) const
  {
    if (_degree != other._degree)
      return false;
    for (const auto &g : _generators)
      if (!other.contains(g))
        return false;
    return true;
  }

private:
  struct Cache
  {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::string _name;
  std::shared_ptr<Cache> _cache;
};

/// All elements of G, found by closing {identity} under right
/// multiplication by the generators. Throws CapExceeded past `cap`.
inline std::vector<Permutation> enumerate_elements(const PermGroup &group,
                                                   std::size_t cap = defaults::enumeration_cap)
{
  std::vector<Permutation> elements{Permutation(group.degree())};
  std::unordered_set<Permutation> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto &g : group.generators()) {
      Permutation next = elements[i] * g;
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw CapExceeded("group enumeration truncated", cap);
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

/// Recognizes the full symmetric group by order.
inline bool is_symmetric_group(const PermGroup &group)
{
  return group.order() == factorial(static_cast<unsigned>(group.degree()));
}

/// Recognizes the alternating group by order (A_n is the only subgroup of
/// index 2 in S_n). For n <= 2 the alternating group is trivial.
inline bool is_alternating_group(const PermGroup &group)
{
  auto n = static_cast<unsigned>(group.degree());
  if (n <= 2)
    return group.order() == 1;
  return group.order() * 2 == factorial(n);
}

} // namespace parthom
