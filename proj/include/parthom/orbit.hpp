#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace parthom {

// Actions. Each exposes value_type, hasher, operator()(value, g) for the
// right action value*g, and render(value) for 1-based text output.

struct PointAction
{
  using value_type = Point;
  using hasher = std::hash<Point>;
  Point operator()(Point x, const Permutation &g) const { return g[x]; }
  static std::string render(Point x) { return std::to_string(x + 1); }
};

/// k-subsets as bitmasks (degree <= 64).
struct SubsetAction
{
  using value_type = Mask;
  using hasher = std::hash<Mask>;
  Mask operator()(Mask m, const Permutation &g) const { return apply_mask(m, g); }
  static std::string render(Mask m)
  {
    std::string s = "{";
    auto pts = mask_points(m);
    for (std::size_t i = 0; i < pts.size(); ++i)
      s += (i ? "," : "") + std::to_string(pts[i] + 1);
    return s + "}";
  }
};

struct TupleHash
{
  std::size_t operator()(const std::vector<Point> &t) const noexcept
  {
    std::uint64_t h = t.size();
    for (Point x : t)
      h = hash_mix(h, x);
    return h;
  }
};

/// Ordered tuples of points, acted on coordinatewise.
struct TupleAction
{
  using value_type = std::vector<Point>;
  using hasher = TupleHash;
  value_type operator()(const value_type &t, const Permutation &g) const
  {
    value_type out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      out[i] = g[t[i]];
    return out;
  }
  static std::string render(const value_type &t)
  {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
      s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + ")";
  }
};

struct SetPartitionAction
{
  using value_type = SetPartition;
  using hasher = SetPartitionHash;
  SetPartition operator()(const SetPartition &p, const Permutation &g) const { return p.apply(g); }
  static std::string render(const SetPartition &p) { return p.to_string(); }
};

struct OrderedPartitionAction
{
  using value_type = OrderedSetPartition;
  using hasher = OrderedSetPartitionHash;
  OrderedSetPartition operator()(const OrderedSetPartition &p, const Permutation &g) const
  {
    return p.apply(g);
  }
  static std::string render(const OrderedSetPartition &p) { return p.to_string(); }
};

/// Diagonal action on A x B.
template <class ActA, class ActB>
struct ProductAction
{
  using value_type = std::pair<typename ActA::value_type, typename ActB::value_type>;
  struct hasher
  {
    std::size_t operator()(const value_type &v) const noexcept
    {
      return hash_mix(typename ActA::hasher{}(v.first), typename ActB::hasher{}(v.second));
    }
  };

  ActA a;
  ActB b;

  value_type operator()(const value_type &v, const Permutation &g) const
  {
    return {a(v.first, g), b(v.second, g)};
  }
  static std::string render(const value_type &v)
  {
    return "<" + ActA::render(v.first) + "; " + ActB::render(v.second) + ">";
  }
};

/// An orbit together with its Schreier tree: element i (i > 0) was first
/// reached as elements[parent[i]] * generators[via[i]].
template <class Action>
struct Orbit
{
  using value_type = typename Action::value_type;

  std::vector<value_type> elements;
  std::unordered_map<value_type, std::size_t, typename Action::hasher> index;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const value_type &v) const { return index.count(v) != 0; }
};

/// Breadth-first closure of `seed` under the generators of G.
template <class Action>
Orbit<Action> orbit_with_tree(const PermGroup &group, const typename Action::value_type &seed,
                              const Action &act = {}, std::size_t cap = defaults::orbit_cap)
{
  Orbit<Action> orb;
  orb.elements.push_back(seed);
  orb.index.emplace(seed, 0);
  orb.parent.push_back(0);
  orb.via.push_back(0);
  const auto &gens = group.generators();
  for (std::size_t i = 0; i < orb.elements.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto image = act(orb.elements[i], gens[s]);
      if (orb.index.count(image))
        continue;
      if (orb.elements.size() >= cap)
        throw CapExceeded("orbit truncated", cap);
      orb.index.emplace(image, orb.elements.size());
      orb.elements.push_back(std::move(image));
      orb.parent.push_back(i);
      orb.via.push_back(s);
    }
  }
  return orb;
}

/// The orbit as a set (no Schreier tree kept).
template <class Action>
std::unordered_set<typename Action::value_type, typename Action::hasher>
orbit(const PermGroup &group, const typename Action::value_type &seed, const Action &act = {},
      std::size_t cap = defaults::orbit_cap)
{
  std::unordered_set<typename Action::value_type, typename Action::hasher> seen{seed};
  std::vector<typename Action::value_type> queue{seed};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto &g : group.generators()) {
      auto image = act(queue[i], g);
      if (seen.count(image))
        continue;
      if (seen.size() >= cap)
        throw CapExceeded("orbit truncated", cap);
      seen.insert(image);
      queue.push_back(std::move(image));
    }
  }
  return seen;
}

template <class Action>
std::uint64_t orbit_size(const PermGroup &group, const typename Action::value_type &seed,
                         const Action &act = {}, std::size_t cap = defaults::orbit_cap)
{
  return orbit(group, seed, act, cap).size();
}

/// Coset representatives along the Schreier tree: seed * reps[i] == elements[i].
template <class Action>
std::vector<Permutation> transversal(const PermGroup &group, const Orbit<Action> &orb)
{
  std::vector<Permutation> reps;
  reps.reserve(orb.size());
  reps.emplace_back(group.degree());
  for (std::size_t i = 1; i < orb.size(); ++i)
    reps.push_back(reps[orb.parent[i]] * group.generators()[orb.via[i]]);
  return reps;
}

/// Schreier generators for the stabilizer of `seed`, deduplicated and with
/// the identity removed (the trivial group gets the identity generator).
template <class Action>
PermGroup stabilizer_generators(const PermGroup &group, const typename Action::value_type &seed,
                                const Action &act = {}, std::size_t cap = defaults::orbit_cap)
{
  auto orb = orbit_with_tree(group, seed, act, cap);
  auto reps = transversal(group, orb);
  std::vector<Permutation> inverse_reps;
  inverse_reps.reserve(reps.size());
  for (const auto &u : reps)
    inverse_reps.push_back(u.inverse());

  std::unordered_set<Permutation> seen;
  std::vector<Permutation> gens;
  const auto &generators = group.generators();
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      std::size_t j = orb.index.at(act(orb.elements[i], generators[s]));
      Permutation h = reps[i] * generators[s] * inverse_reps[j];
      if (!h.is_identity() && seen.insert(h).second)
        gens.push_back(std::move(h));
    }
  }
  std::string name = group.name().empty() ? "" : "Stab_" + group.name() + "(" + Action::render(seed) + ")";
  return PermGroup(group.degree(), std::move(gens), std::move(name));
}

/// Restriction of H to an invariant set of points, relabelled by position
/// in `domain` (0-based points).
inline PermGroup induced_action(const PermGroup &group, const std::vector<Point> &domain)
{
  if (domain.empty())
    throw Error(ErrorKind::invalid_argument, "induced_action needs a non-empty domain");
  std::vector<std::int32_t> position(group.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] >= group.degree())
      throw Error(ErrorKind::invalid_argument, "induced_action domain point out of range");
    if (position[domain[i]] >= 0)
      throw Error(ErrorKind::invalid_argument, "induced_action domain has a repeated point");
    position[domain[i]] = static_cast<std::int32_t>(i);
  }
  std::vector<Permutation> gens;
  for (const auto &g : group.generators()) {
    std::vector<Point> images(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      std::int32_t p = position[g[domain[i]]];
      if (p < 0)
        throw Error(ErrorKind::invalid_argument,
                    "generator " + g.to_cycle_string() + " maps point " + std::to_string(domain[i] + 1) +
                      " outside the induced domain");
      images[i] = static_cast<Point>(p);
    }
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup(domain.size(), std::move(gens));
}

/// Partitions an explicit, G-invariant domain into orbits.
template <class Action>
std::vector<std::vector<typename Action::value_type>>
orbits_of_domain(const PermGroup &group, const std::vector<typename Action::value_type> &domain,
                 const Action &act = {})
{
  std::unordered_map<typename Action::value_type, bool, typename Action::hasher> visited;
  for (const auto &x : domain)
    visited.emplace(x, false);
  std::vector<std::vector<typename Action::value_type>> result;
  for (const auto &x : domain) {
    if (visited.at(x))
      continue;
    std::vector<typename Action::value_type> orb{x};
    visited[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto &g : group.generators()) {
        auto y = act(orb[i], g);
        auto it = visited.find(y);
        if (it == visited.end())
          throw Error(ErrorKind::invalid_argument, "domain is not closed under the action: " +
                                                     Action::render(orb[i]) + " leaves it");
        if (!it->second) {
          it->second = true;
          orb.push_back(std::move(y));
        }
      }
    }
    result.push_back(std::move(orb));
  }
  return result;
}

/// Orbit count as the average number of fixed points over all of G.
template <class Action>
std::uint64_t burnside_orbit_count(const PermGroup &group,
                                   const std::vector<typename Action::value_type> &domain,
                                   const Action &act = {},
                                   std::size_t cap = defaults::enumeration_cap)
{
  auto elements = enumerate_elements(group, cap);
  BigInt fixed_total = 0;
  for (const auto &g : elements) {
    std::uint64_t fixed = 0;
    for (const auto &x : domain)
      if (act(x, g) == x)
        ++fixed;
    fixed_total += fixed;
  }
  if (fixed_total % elements.size() != 0)
    throw Error(ErrorKind::internal, "fixed-point total " + fixed_total.str() +
                                       " is not divisible by |G| = " + std::to_string(elements.size()));
  return (fixed_total / elements.size()).convert_to<std::uint64_t>();
}

/// Orbit count by direct enumeration of G: x ~ y iff y = x g for some g.
/// Independent of the generator-based BFS; used by oracles.
template <class Action>
std::uint64_t brute_force_orbit_count(const std::vector<Permutation> &elements,
                                      const std::vector<typename Action::value_type> &domain,
                                      const Action &act = {})
{
  std::unordered_set<typename Action::value_type, typename Action::hasher> assigned;
  std::uint64_t count = 0;
  for (const auto &x : domain) {
    if (assigned.count(x))
      continue;
    ++count;
    for (const auto &g : elements)
      assigned.insert(act(x, g));
  }
  return count;
}

} // namespace parthom
