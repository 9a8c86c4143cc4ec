#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "perm_group.hpp"
#include "transformation.hpp"

namespace parthom {

/// A finite set of maps of one degree, closed under composition. Elements
/// keep the order in which the closure found them.
class TransSemigroup
{
public:
  TransSemigroup() = default;
  TransSemigroup(std::size_t degree, std::vector<Transformation> elements, std::string description = {})
      : _degree(degree), _elements(std::move(elements)), _description(std::move(description))
  {
    _index.reserve(_elements.size());
    for (const auto &x : _elements)
      _index.insert(x);
  }

  std::size_t degree() const noexcept { return _degree; }
  std::size_t size() const noexcept { return _elements.size(); }
  const std::vector<Transformation> &elements() const noexcept { return _elements; }
  const std::string &description() const noexcept { return _description; }
  bool contains(const Transformation &x) const { return _index.count(x) != 0; }

  bool same_elements(const TransSemigroup &other) const
  {
    if (size() != other.size())
      return false;
    return std::all_of(_elements.begin(), _elements.end(), [&](const auto &x) { return other.contains(x); });
  }

  bool is_subset_of(const TransSemigroup &other) const
  {
    return std::all_of(_elements.begin(), _elements.end(), [&](const auto &x) { return other.contains(x); });
  }

  /// Full pairwise check; meant for small semigroups.
  bool is_closed() const
  {
    for (const auto &x : _elements)
      for (const auto &y : _elements)
        if (!contains(x * y))
          return false;
    return true;
  }

  /// Elements as 1-based image strings, sorted.
  std::vector<std::string> dump() const
  {
    std::vector<Transformation> sorted = _elements;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> out;
    for (const auto &x : sorted)
      out.push_back(x.to_string());
    return out;
  }

private:
  std::size_t _degree = 0;
  std::vector<Transformation> _elements;
  std::unordered_set<Transformation> _index;
  std::string _description;
};

namespace semigroup_detail {

inline void require_same_degree(std::size_t degree, const Transformation &x)
{
  if (x.degree() != degree)
    throw Error(ErrorKind::degree_mismatch, "map " + x.to_string() + " has degree " + std::to_string(x.degree()) +
                                               ", expected " + std::to_string(degree));
}

inline void require_singular(const Transformation &a)
{
  if (a.is_bijective())
    throw Error(ErrorKind::invalid_argument, "permutation given: " + a.to_string() + " is bijective");
}

/// Breadth-first closure of `seeds` under x -> x*r for r in `right` and
/// x -> l*x for l in `left`.
inline TransSemigroup bfs(std::size_t degree, const std::vector<Transformation> &seeds,
                          const std::vector<Transformation> &right, const std::vector<Transformation> &left,
                          std::size_t cap, std::string description)
{
  std::vector<Transformation> elements;
  std::unordered_set<Transformation> seen;
  auto visit = [&](Transformation x) {
    if (seen.count(x))
      return;
    if (elements.size() >= cap)
      throw CapExceeded("closure truncated", cap);
    seen.insert(x);
    elements.push_back(std::move(x));
  };
  for (const auto &s : seeds)
    visit(s);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto &r : right)
      visit(elements[i] * r);
    for (const auto &l : left)
      visit(l * elements[i]);
  }
  return TransSemigroup(degree, std::move(elements), std::move(description));
}

inline std::vector<Transformation> as_maps(const std::vector<Permutation> &perms)
{
  std::vector<Transformation> out;
  for (const auto &p : perms)
    out.emplace_back(p);
  return out;
}

} // namespace semigroup_detail

/// Every product of one or more generators.
inline TransSemigroup closure(const std::vector<Transformation> &gens, std::size_t cap = defaults::closure_cap)
{
  if (gens.empty())
    throw Error(ErrorKind::invalid_argument, "closure needs at least one generator");
  for (const auto &g : gens)
    semigroup_detail::require_same_degree(gens.front().degree(), g);
  return semigroup_detail::bfs(gens.front().degree(), gens, gens, {}, cap, "closure");
}

/// The non-units of <a, G>: all words in a and G containing a at least once.
/// Found from a by multiplying with G's generators on both sides and with a
/// on the right.
inline TransSemigroup generate_arc(const Transformation &a, const PermGroup &group,
                                   std::size_t cap = defaults::closure_cap)
{
  semigroup_detail::require_same_degree(group.degree(), a);
  semigroup_detail::require_singular(a);
  auto gens = semigroup_detail::as_maps(group.generators());
  auto right = gens;
  right.push_back(a);
  return semigroup_detail::bfs(a.degree(), {a}, right, gens, cap, "<a,G>\\G");
}

/// The non-units of <A, G> for a set A of singular maps.
inline TransSemigroup generate_arc(const std::vector<Transformation> &maps, const PermGroup &group,
                                   std::size_t cap = defaults::closure_cap)
{
  if (maps.empty())
    throw Error(ErrorKind::invalid_argument, "generate_arc needs at least one map");
  for (const auto &a : maps) {
    semigroup_detail::require_same_degree(group.degree(), a);
    semigroup_detail::require_singular(a);
  }
  auto gens = semigroup_detail::as_maps(group.generators());
  auto right = gens;
  right.insert(right.end(), maps.begin(), maps.end());
  return semigroup_detail::bfs(group.degree(), maps, right, gens, cap, "<A,G>\\G");
}

/// Closure of { g^-1 a g : g in G }.
inline TransSemigroup generate_conjugates(const Transformation &a, const PermGroup &group,
                                          std::size_t cap = defaults::closure_cap)
{
  semigroup_detail::require_same_degree(group.degree(), a);
  semigroup_detail::require_singular(a);
  std::vector<Transformation> conj;
  std::unordered_set<Transformation> seen;
  for (const auto &g : enumerate_elements(group, defaults::enumeration_cap)) {
    auto c = g.inverse() * a * g;
    if (seen.insert(c).second)
      conj.push_back(std::move(c));
  }
  return semigroup_detail::bfs(a.degree(), conj, conj, {}, cap, "<g^-1 a g>");
}

/// b lies in <a, S_n> \ S_n, decided on kernel types alone.
inline bool sn_normal_membership(const Transformation &b, const Transformation &a)
{
  semigroup_detail::require_same_degree(a.degree(), b);
  semigroup_detail::require_singular(a);
  semigroup_detail::require_singular(b);
  return coarsening_feasible(a.kernel_type(), b.kernel_type());
}

/// The idempotent power of a.
inline Transformation omega_power(const Transformation &a)
{
  Transformation x = a;
  for (std::size_t i = 1; i < a.degree(); ++i)
    x = x * a; // x = a^n, past the index of a
  Transformation y = x;
  while (!(y * y == y))
    y = y * x;
  return y;
}

inline std::vector<Transformation> idempotents(const TransSemigroup &s)
{
  std::vector<Transformation> out;
  for (const auto &x : s.elements())
    if (x.is_idempotent())
      out.push_back(x);
  return out;
}

/// Every x has some y with xyx = x. Only y of rank >= rank(x) can work.
inline bool is_regular(const TransSemigroup &s)
{
  std::vector<std::pair<std::size_t, const Transformation *>> by_rank;
  for (const auto &y : s.elements())
    by_rank.emplace_back(y.rank(), &y);
  std::sort(by_rank.begin(), by_rank.end(), [](const auto &l, const auto &r) { return l.first > r.first; });
  for (const auto &x : s.elements()) {
    std::size_t rx = x.rank();
    bool found = false;
    for (const auto &[ry, y] : by_rank) {
      if (ry < rx)
        break;
      if (x * *y * x == x) {
        found = true;
        break;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

inline bool is_idempotent_generated(const TransSemigroup &s, std::size_t cap = defaults::closure_cap)
{
  auto idem = idempotents(s);
  if (idem.empty())
    return false;
  return closure(idem, cap).same_elements(s);
}

inline bool contains_all_constants(const TransSemigroup &s)
{
  for (std::size_t v = 0; v < s.degree(); ++v)
    if (!s.contains(Transformation::constant(s.degree(), static_cast<Point>(v))))
      return false;
  return true;
}

/// Each relation decided by comparing principal ideals (with the element
/// itself adjoined) and by the kernel / image / rank invariants.
struct GreenReport
{
  bool r_by_ideals = false, r_by_kernels = false;
  bool l_by_ideals = false, l_by_images = false;
  bool j_by_ideals = false, j_by_ranks = false;

  bool consistent() const
  {
    return r_by_ideals == r_by_kernels && l_by_ideals == l_by_images && j_by_ideals == j_by_ranks;
  }
};

namespace semigroup_detail {

using ElementSet = std::unordered_set<Transformation>;

inline ElementSet right_ideal(const TransSemigroup &s, const Transformation &a)
{
  ElementSet out{a};
  for (const auto &x : s.elements())
    out.insert(a * x);
  return out;
}

inline ElementSet left_ideal(const TransSemigroup &s, const Transformation &a)
{
  ElementSet out{a};
  for (const auto &x : s.elements())
    out.insert(x * a);
  return out;
}

inline ElementSet two_sided_ideal(const TransSemigroup &s, const Transformation &a)
{
  ElementSet right = right_ideal(s, a);
  ElementSet out = right;
  for (const auto &x : s.elements())
    for (const auto &r : right)
      out.insert(x * r);
  return out;
}

} // namespace semigroup_detail

inline GreenReport green_checks(const TransSemigroup &s, const Transformation &a, const Transformation &b)
{
  for (const auto *x : {&a, &b})
    if (!s.contains(*x))
      throw Error(ErrorKind::invalid_argument, "map " + x->to_string() + " is not in the semigroup");
  using namespace semigroup_detail;
  GreenReport r;
  r.r_by_ideals = right_ideal(s, a) == right_ideal(s, b);
  r.r_by_kernels = a.kernel_labels() == b.kernel_labels();
  r.l_by_ideals = left_ideal(s, a) == left_ideal(s, b);
  r.l_by_images = a.image() == b.image();
  r.j_by_ideals = two_sided_ideal(s, a) == two_sided_ideal(s, b);
  r.j_by_ranks = a.rank() == b.rank();
  return r;
}

struct LocalGroup
{
  std::size_t size = 0;
  std::size_t rank = 0;
  bool closed = false;
  bool has_identity = false;

  /// Same order as the symmetric group on `rank` points, closed, with e as
  /// two-sided identity.
  bool matches_symmetric() const { return closed && has_identity && BigInt(size) == factorial(static_cast<unsigned>(rank)); }
};

/// The elements of S sharing kernel and image with the idempotent e.
inline LocalGroup local_group_at(const TransSemigroup &s, const Transformation &e)
{
  if (!s.contains(e) || !e.is_idempotent())
    throw Error(ErrorKind::invalid_argument, "map " + e.to_string() + " is not an idempotent of the semigroup");
  auto kernel = e.kernel_labels();
  auto image = e.image();
  std::unordered_set<Transformation> h;
  for (const auto &f : s.elements())
    if (f.kernel_labels() == kernel && f.image() == image)
      h.insert(f);
  LocalGroup out;
  out.size = h.size();
  out.rank = image.size();
  out.closed = true;
  out.has_identity = true;
  for (const auto &f : h) {
    if (!(e * f == f && f * e == f))
      out.has_identity = false;
    for (const auto &g : h)
      if (!h.count(f * g))
        out.closed = false;
  }
  return out;
}

} // namespace parthom
