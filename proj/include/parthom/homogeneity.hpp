#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "orbit.hpp"
#include "partitions.hpp"
#include "perm_group.hpp"

namespace parthom {

enum class Method {
  orbit_bfs,
  order_bound,       // the expected orbit length does not divide |G|
  stabilizer_chain,  // basic orbit lengths along a chain with a prescribed base
  order_recognition, // G is S_n or A_n, recognised from |G|
  definitional,      // holds for every group (t = 0, lambda = (1,...,1), ...)
};

inline const char *to_string(Method m)
{
  switch (m) {
  case Method::orbit_bfs: return "orbit-BFS";
  case Method::order_bound: return "order-bound";
  case Method::stabilizer_chain: return "stabilizer-chain";
  case Method::order_recognition: return "order-recognition";
  case Method::definitional: return "definitional";
  }
  return "?";
}

struct HomogeneityReport
{
  std::string group;
  std::string query;
  bool verdict = false;
  std::optional<std::uint64_t> orbit_size; // set when an orbit was measured
  BigInt expected = 0;
  Method method = Method::orbit_bfs;
};

namespace homog_detail {

inline std::string group_label(const PermGroup &g)
{
  return g.name().empty() ? "degree " + std::to_string(g.degree()) : g.name();
}

inline HomogeneityReport make(const PermGroup &g, std::string query, BigInt expected)
{
  HomogeneityReport r;
  r.group = group_label(g);
  r.query = std::move(query);
  r.expected = std::move(expected);
  return r;
}

inline void require_lambda(const PermGroup &g, const IntPartition &lambda)
{
  if (lambda.n() != g.degree())
    throw Error(ErrorKind::degree_mismatch, "partition " + lambda.to_string() + " has sum " +
                                               std::to_string(lambda.n()) + " but the group has degree " +
                                               std::to_string(g.degree()));
}

template <class Action>
void measure(HomogeneityReport &r, const PermGroup &g, const typename Action::value_type &seed, std::size_t cap)
{
  r.method = Method::orbit_bfs;
  r.orbit_size = orbit_size(g, seed, Action{}, cap);
  r.verdict = BigInt(*r.orbit_size) == r.expected;
}

} // namespace homog_detail

/// Transitivity on t-subsets. Uses min(t, n-t).
inline HomogeneityReport t_homogeneity(const PermGroup &g, unsigned t, std::size_t cap = defaults::orbit_cap)
{
  const auto n = static_cast<unsigned>(g.degree());
  if (t > n)
    throw Error(ErrorKind::invalid_argument, "t = " + std::to_string(t) + " exceeds the degree " + std::to_string(n));
  unsigned s = std::min(t, n - t);
  auto r = homog_detail::make(g, std::to_string(t) + "-homogeneous", binomial(n, s));
  if (s == 0) {
    r.method = Method::definitional;
    r.verdict = true;
    return r;
  }
  if (g.order() % r.expected != 0) {
    r.method = Method::order_bound;
    return r;
  }
  require_mask_degree(n);
  homog_detail::measure<SubsetAction>(r, g, full_mask(s), cap);
  return r;
}

/// Transitivity on injective t-tuples. Falls back to a stabilizer chain with
/// base 1..t when the tuple orbit would be long.
inline HomogeneityReport t_transitivity(const PermGroup &g, unsigned t, std::size_t cap = defaults::orbit_cap)
{
  const auto n = static_cast<unsigned>(g.degree());
  if (t > n)
    throw Error(ErrorKind::invalid_argument, "t = " + std::to_string(t) + " exceeds the degree " + std::to_string(n));
  auto r = homog_detail::make(g, std::to_string(t) + "-transitive", falling_factorial(n, t));
  if (t == 0) {
    r.method = Method::definitional;
    r.verdict = true;
    return r;
  }
  if (g.order() % r.expected != 0) {
    r.method = Method::order_bound;
    return r;
  }
  if (r.expected <= std::min(cap, defaults::tuple_bfs_limit)) {
    std::vector<Point> seed(t);
    for (unsigned i = 0; i < t; ++i)
      seed[i] = static_cast<Point>(i);
    homog_detail::measure<TupleAction>(r, g, seed, cap);
    return r;
  }
  std::vector<Point> prefix(t);
  for (unsigned i = 0; i < t; ++i)
    prefix[i] = static_cast<Point>(i);
  auto chain = schreier_sims(g.degree(), g.generators(), prefix);
  BigInt reached = 1;
  for (unsigned i = 0; i < t && i < chain.levels().size(); ++i)
    reached *= chain.levels()[i].orbit.size();
  r.method = Method::stabilizer_chain;
  r.verdict = reached == r.expected;
  return r;
}

inline HomogeneityReport lambda_homogeneity(const PermGroup &g, const IntPartition &lambda,
                                            std::size_t cap = defaults::orbit_cap)
{
  homog_detail::require_lambda(g, lambda);
  auto r = homog_detail::make(g, "lambda-homogeneous " + lambda.to_string(), count_unordered(lambda));
  if (lambda.is_all_ones() || lambda.is_single_part()) {
    r.method = Method::definitional;
    r.verdict = true;
    return r;
  }
  if (is_symmetric_group(g) || is_alternating_group(g)) {
    r.method = Method::order_recognition;
    r.verdict = true;
    return r;
  }
  if (g.order() % r.expected != 0) {
    r.method = Method::order_bound;
    return r;
  }
  homog_detail::measure<SetPartitionAction>(r, g, SetPartition::first_of_type(lambda), cap);
  return r;
}

inline HomogeneityReport lambda_transitivity(const PermGroup &g, const IntPartition &lambda,
                                             std::size_t cap = defaults::orbit_cap)
{
  homog_detail::require_lambda(g, lambda);
  auto r = homog_detail::make(g, "lambda-transitive " + lambda.to_string(), count_ordered(lambda));
  if (lambda.is_single_part()) {
    r.method = Method::definitional;
    r.verdict = true;
    return r;
  }
  if (is_symmetric_group(g)) {
    r.method = Method::order_recognition;
    r.verdict = true;
    return r;
  }
  if (is_alternating_group(g)) {
    r.method = Method::order_recognition;
    r.verdict = !lambda.is_all_ones();
    return r;
  }
  if (g.order() % r.expected != 0) {
    r.method = Method::order_bound;
    return r;
  }
  homog_detail::measure<OrderedPartitionAction>(r, g, OrderedSetPartition::first_of_type(lambda), cap);
  return r;
}

inline bool is_t_homogeneous(const PermGroup &g, unsigned t, std::size_t cap = defaults::orbit_cap)
{
  return t_homogeneity(g, t, cap).verdict;
}

inline bool is_t_transitive(const PermGroup &g, unsigned t, std::size_t cap = defaults::orbit_cap)
{
  return t_transitivity(g, t, cap).verdict;
}

inline bool is_lambda_homogeneous(const PermGroup &g, const IntPartition &lambda,
                                  std::size_t cap = defaults::orbit_cap)
{
  return lambda_homogeneity(g, lambda, cap).verdict;
}

inline bool is_lambda_transitive(const PermGroup &g, const IntPartition &lambda,
                                 std::size_t cap = defaults::orbit_cap)
{
  return lambda_transitivity(g, lambda, cap).verdict;
}

/// t-homogeneous for every 1 <= t <= n/2 (and so for every t).
inline bool is_set_transitive(const PermGroup &g, std::size_t cap = defaults::orbit_cap)
{
  for (unsigned t = 1; 2 * t <= g.degree(); ++t)
    if (!is_t_homogeneous(g, t, cap))
      return false;
  return true;
}

/// Largest t <= n/2 such that G is s-homogeneous for all s <= t. Set-transitive
/// groups get floor(n/2).
inline unsigned exact_homogeneity_degree(const PermGroup &g, std::size_t cap = defaults::orbit_cap)
{
  unsigned t = 0;
  while (2 * (t + 1) <= g.degree() && is_t_homogeneous(g, t + 1, cap))
    ++t;
  return t;
}

/// The largest part of lambda is n - t with t < n/2, G is t-homogeneous, and
/// the setwise stabilizer of a t-set induces a lambda'-transitive group on
/// it, lambda' being lambda without its largest part.
inline bool is_standard_pair(const PermGroup &g, const IntPartition &lambda, std::size_t cap = defaults::orbit_cap)
{
  homog_detail::require_lambda(g, lambda);
  if (lambda.is_single_part())
    throw Error(ErrorKind::invalid_argument, "standard pairs need lambda != (n)");
  const unsigned n = lambda.n();
  const unsigned t = n - lambda.largest();
  if (2 * t >= n || !is_t_homogeneous(g, t, cap))
    return false;
  Mask tset = full_mask(t);
  auto stab = stabilizer_generators(g, tset, SubsetAction{}, cap);
  auto induced = induced_action(stab, mask_points(tset));
  return is_lambda_transitive(induced, IntPartition(lambda.tail()), cap);
}

enum class LambdaBehavior { transitive, homogeneous_only, neither };

inline const char *to_string(LambdaBehavior b)
{
  switch (b) {
  case LambdaBehavior::transitive: return "transitive";
  case LambdaBehavior::homogeneous_only: return "homogeneous-only";
  case LambdaBehavior::neither: return "neither";
  }
  return "?";
}

inline LambdaBehavior lambda_behavior(const PermGroup &g, const IntPartition &lambda,
                                      std::size_t cap = defaults::orbit_cap)
{
  if (is_lambda_transitive(g, lambda, cap))
    return LambdaBehavior::transitive;
  return is_lambda_homogeneous(g, lambda, cap) ? LambdaBehavior::homogeneous_only : LambdaBehavior::neither;
}

} // namespace parthom
