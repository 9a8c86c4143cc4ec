#pragma once

// Brute-force reference computations for the tests. None of these use the
// library's orbit, enumeration or closure code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "parthom/parthom.hpp"

namespace oracle {

using parthom::Permutation;
using parthom::Point;
using parthom::Transformation;

/// Every permutation of {0..n-1}, in lexicographic order.
inline std::vector<Permutation> symmetric_elements(std::size_t n)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do
    out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// The group generated by `gens` as a plain set, by repeated multiplication
/// until nothing new appears.
inline std::set<std::vector<Point>> group_closure(std::size_t n, const std::vector<Permutation> &gens)
{
  std::set<std::vector<Point>> elements;
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  elements.insert(id);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Point>> current(elements.begin(), elements.end());
    for (const auto &x : current)
      for (const auto &g : gens) {
        std::vector<Point> y(n);
        for (std::size_t i = 0; i < n; ++i)
          y[i] = g.images()[x[i]];
        grew |= elements.insert(y).second;
      }
  }
  return elements;
}

/// All set partitions of {0..n-1} as block-label vectors (restricted growth
/// strings).
inline std::vector<std::vector<int>> all_set_partitions(int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  auto rec = [&](auto &&self, int i, int max_label) -> void {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      a[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (n > 0) {
    a[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

inline std::vector<unsigned> block_sizes(const std::vector<int> &labels)
{
  std::map<int, unsigned> count;
  for (int l : labels)
    ++count[l];
  std::vector<unsigned> sizes;
  for (auto [l, c] : count)
    sizes.push_back(c);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

/// Unordered partition as a sorted set of sorted blocks.
using Blocks = std::set<std::set<int>>;

inline Blocks to_blocks(const std::vector<int> &labels)
{
  std::map<int, std::set<int>> m;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    m[labels[i]].insert(i);
  Blocks b;
  for (auto &[l, s] : m)
    b.insert(s);
  return b;
}

inline Blocks image(const Blocks &b, const Permutation &g)
{
  Blocks out;
  for (const auto &blk : b) {
    std::set<int> s;
    for (int x : blk)
      s.insert(g.images()[x]);
    out.insert(s);
  }
  return out;
}

/// Number of orbits of the full element list on all set partitions of the
/// given type (unordered), or on ordered ones when `ordered`.
inline std::size_t partition_orbit_count(const std::vector<Permutation> &elements, const std::vector<unsigned> &type,
                                         bool ordered)
{
  const int n = static_cast<int>(elements.front().degree());
  std::set<std::vector<std::set<int>>> domain;
  for (const auto &labels : all_set_partitions(n)) {
    if (block_sizes(labels) != type)
      continue;
    auto b = to_blocks(labels);
    std::vector<std::set<int>> blocks(b.begin(), b.end());
    if (!ordered) {
      std::sort(blocks.begin(), blocks.end());
      domain.insert(blocks);
      continue;
    }
    // every ordering of the blocks whose sizes read as `type`
    std::sort(blocks.begin(), blocks.end());
    do {
      bool fits = true;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        fits &= blocks[i].size() == type[i];
      if (fits)
        domain.insert(blocks);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  std::set<std::vector<std::set<int>>> assigned;
  std::size_t orbits = 0;
  for (const auto &x : domain) {
    if (assigned.count(x))
      continue;
    ++orbits;
    for (const auto &g : elements) {
      std::vector<std::set<int>> y;
      for (const auto &blk : x) {
        std::set<int> s;
        for (int p : blk)
          s.insert(g.images()[p]);
        y.push_back(s);
      }
      if (!ordered)
        std::sort(y.begin(), y.end());
      assigned.insert(y);
    }
  }
  return orbits;
}

inline std::size_t subset_orbit_count(const std::vector<Permutation> &elements, unsigned k)
{
  const auto n = elements.front().degree();
  std::set<std::uint64_t> assigned;
  std::size_t orbits = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<unsigned>(__builtin_popcountll(m)) != k || assigned.count(m))
      continue;
    ++orbits;
    for (const auto &g : elements) {
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1)
          y |= std::uint64_t{1} << g.images()[i];
      assigned.insert(y);
    }
  }
  return orbits;
}

/// Every self-map of {0..n-1}.
inline std::vector<Transformation> all_maps(std::size_t n)
{
  std::vector<Transformation> out;
  std::vector<Point> images(n, 0);
  while (true) {
    out.emplace_back(images);
    std::size_t i = 0;
    while (i < n && ++images[i] == n)
      images[i++] = 0;
    if (i == n)
      break;
  }
  return out;
}

/// Least set containing `seeds` closed under all pairwise products.
inline std::set<Transformation> pairwise_closure(const std::vector<Transformation> &seeds)
{
  std::set<Transformation> s(seeds.begin(), seeds.end());
  std::vector<Transformation> frontier(s.begin(), s.end());
  while (!frontier.empty()) {
    std::vector<Transformation> all(s.begin(), s.end());
    std::vector<Transformation> fresh;
    for (const auto &x : frontier)
      for (const auto &y : all) {
        for (auto z : {x * y, y * x})
          if (s.insert(z).second)
            fresh.push_back(z);
      }
    frontier = std::move(fresh);
  }
  return s;
}

/// <a, G> \ G by the definition: closure of { g a h : g, h in G }.
inline std::set<Transformation> arc_by_definition(const Transformation &a, const std::vector<Permutation> &group)
{
  std::set<Transformation> gah;
  for (const auto &g : group)
    for (const auto &h : group)
      gah.insert(g * a * h);
  return pairwise_closure({gah.begin(), gah.end()});
}

/// Some g in S_n maps the kernel of a into a refinement of the kernel of b.
inline bool kernel_moves_into(const Transformation &a, const Transformation &b,
                              const std::vector<Permutation> &symmetric)
{
  const auto n = a.degree();
  for (const auto &g : symmetric) {
    bool ok = true;
    // x ~a y  =>  xg ~b yg
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = x + 1; y < n && ok; ++y)
        if (a.images()[x] == a.images()[y] && b.images()[g.images()[x]] != b.images()[g.images()[y]])
          ok = false;
    if (ok)
      return true;
  }
  return false;
}

inline Permutation random_permutation(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Number of partitions of n by the standard recurrence on the largest part.
inline std::uint64_t partition_number(unsigned n)
{
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned m = k; m <= n; ++m)
      p[m] += p[m - k];
  return p[n];
}

} // namespace oracle
