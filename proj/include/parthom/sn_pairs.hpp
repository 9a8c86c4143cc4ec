#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "homogeneity.hpp"
#include "partitions.hpp"
#include "perm_group.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace parthom {

/// Verdict for a map of kernel type lambda (rank r = number of parts)
/// together with G: G must be r-homogeneous and lambda-homogeneous.
struct PairVerdict
{
  IntPartition lambda;
  unsigned rank = 0;
  bool verdict = false;
  HomogeneityReport rank_test;
  HomogeneityReport lambda_test;
  std::string clause; // filled by classify_all; "" when not asked

  /// Which condition failed, or "" for a pair.
  std::string witness() const
  {
    if (!rank_test.verdict)
      return "not " + std::to_string(rank) + "-homogeneous";
    if (!lambda_test.verdict)
      return "not lambda-homogeneous";
    return "";
  }
};

inline PairVerdict is_sn_pair(const IntPartition &lambda, const PermGroup &group,
                              std::size_t cap = defaults::orbit_cap)
{
  if (lambda.n() != group.degree())
    throw Error(ErrorKind::degree_mismatch, "partition " + lambda.to_string() + " does not partition " +
                                               std::to_string(group.degree()));
  if (lambda.is_all_ones())
    throw Error(ErrorKind::invalid_argument, "not a singular kernel type: " + lambda.to_string());
  PairVerdict v;
  v.lambda = lambda;
  v.rank = static_cast<unsigned>(lambda.num_parts());
  v.rank_test = t_homogeneity(group, v.rank, cap);
  // Skip the partition orbit once the rank test has failed.
  if (v.rank_test.verdict) {
    v.lambda_test = lambda_homogeneity(group, lambda, cap);
  } else {
    v.lambda_test.group = v.rank_test.group;
    v.lambda_test.query = "lambda-homogeneous " + lambda.to_string() + " (not evaluated)";
    v.lambda_test.method = Method::definitional;
    v.lambda_test.expected = count_unordered(lambda);
  }
  v.verdict = v.rank_test.verdict && v.lambda_test.verdict;
  return v;
}

inline PairVerdict is_sn_pair(const Transformation &a, const PermGroup &group, std::size_t cap = defaults::orbit_cap)
{
  if (a.degree() != group.degree())
    throw Error(ErrorKind::degree_mismatch, "map degree " + std::to_string(a.degree()) + " differs from group degree " +
                                               std::to_string(group.degree()));
  return is_sn_pair(a.kernel_type(), group, cap);
}

// Fixture tables ------------------------------------------------------------

struct FixtureRow
{
  IntPartition lambda;
  bool expect = false;
};

/// Expected pair verdicts for one group, one row per kernel type.
struct FixtureTable
{
  std::string spec;
  unsigned degree = 0;
  std::vector<FixtureRow> rows;

  std::optional<bool> expected(const IntPartition &lambda) const
  {
    for (const auto &r : rows)
      if (r.lambda == lambda)
        return r.expect;
    return std::nullopt;
  }
};

/// Reads
///
///     [group agl1:5 degree 5]
///     lambda=2,2,1 expect=false
///
/// with `#` comments.
inline std::vector<FixtureTable> parse_fixtures(const std::string &text, const std::string &source = "<text>")
{
  std::vector<FixtureTable> tables;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string &why) {
    return Error(ErrorKind::parse, source + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::string first;
    if (!(words >> first))
      continue;
    if (first == "[group") {
      std::string spec, kw, deg;
      if (!(words >> spec >> kw >> deg) || kw != "degree" || deg.empty() || deg.back() != ']')
        throw fail("expected `[group <spec> degree <n>]`");
      FixtureTable t;
      t.spec = spec;
      try {
        t.degree = static_cast<unsigned>(std::stoul(deg.substr(0, deg.size() - 1)));
      } catch (const std::exception &) {
        throw fail("bad degree \"" + deg + "\"");
      }
      CatalogSpec::parse(spec); // validates the family name
      tables.push_back(std::move(t));
      continue;
    }
    if (tables.empty())
      throw fail("row before any [group ...] header");
    std::string second;
    if (first.rfind("lambda=", 0) != 0 || !(words >> second) || second.rfind("expect=", 0) != 0)
      throw fail("expected `lambda=<parts> expect=<true|false>`");
    FixtureRow row;
    try {
      row.lambda = IntPartition::parse(first.substr(7));
    } catch (const Error &e) {
      throw fail(e.what());
    }
    auto value = second.substr(7);
    if (value != "true" && value != "false")
      throw fail("expect must be true or false");
    row.expect = value == "true";
    if (row.lambda.n() != tables.back().degree)
      throw fail("lambda " + row.lambda.to_string() + " does not partition " + std::to_string(tables.back().degree));
    tables.back().rows.push_back(std::move(row));
  }
  return tables;
}

inline std::vector<FixtureTable> read_fixtures(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::invalid_argument, "cannot open fixture file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str(), path);
}

inline std::string default_fixture_path() { return default_data_dir() + "/fixtures/sympairs.txt"; }

// Symbolic classifier -------------------------------------------------------

/// Facts about G computed on first use.
class GroupFacts
{
public:
  explicit GroupFacts(const PermGroup &group, std::size_t cap = defaults::orbit_cap) : _group(group), _cap(cap) {}

  const PermGroup &group() const noexcept { return _group; }

  bool symmetric_or_alternating()
  {
    if (!_sym_alt)
      _sym_alt = is_symmetric_group(_group) || is_alternating_group(_group);
    return *_sym_alt;
  }

  bool transitive()
  {
    if (!_transitive)
      _transitive = _group.is_transitive();
    return *_transitive;
  }

  bool homogeneous(unsigned t)
  {
    auto it = _homogeneous.find(t);
    if (it == _homogeneous.end())
      it = _homogeneous.emplace(t, is_t_homogeneous(_group, t, _cap)).first;
    return it->second;
  }

  bool transitive_on_tuples(unsigned t)
  {
    if (t > _group.degree())
      return false;
    auto it = _tuple_transitive.find(t);
    if (it == _tuple_transitive.end())
      it = _tuple_transitive.emplace(t, is_t_transitive(_group, t, _cap)).first;
    return it->second;
  }

  bool standard(const IntPartition &lambda)
  {
    auto key = lambda.to_string();
    auto it = _standard.find(key);
    if (it == _standard.end())
      it = _standard.emplace(key, is_standard_pair(_group, lambda, _cap)).first;
    return it->second;
  }

  /// Catalog spec of the low-degree exceptional group G is (recognised by
  /// degree, order and transitivity), if any.
  std::optional<std::string> exceptional()
  {
    if (!_exceptional_done) {
      _exceptional_done = true;
      if (transitive()) {
        static const std::vector<std::tuple<std::size_t, unsigned, const char *>> known = {
          {5, 20, "agl1:5"}, {6, 60, "psl2:5"}, {6, 120, "pgl2:5"}, {9, 1512, "pgammal2:8"}, {9, 504, "pgl2:8"},
        };
        for (const auto &[deg, ord, spec] : known)
          if (_group.degree() == deg && _group.order() == ord)
            _exceptional = spec;
      }
    }
    return _exceptional;
  }

private:
  const PermGroup &_group;
  std::size_t _cap;
  std::optional<bool> _sym_alt, _transitive;
  std::map<unsigned, bool> _homogeneous, _tuple_transitive;
  std::map<std::string, bool> _standard;
  bool _exceptional_done = false;
  std::optional<std::string> _exceptional;
};

namespace pair_detail {

inline bool is_hook(const IntPartition &lambda, unsigned head)
{
  const auto &p = lambda.parts();
  return p.front() == head && std::all_of(p.begin() + 1, p.end(), [](unsigned k) { return k == 1; });
}

inline bool is_shape(const IntPartition &lambda, unsigned first, unsigned second)
{
  const auto &p = lambda.parts();
  return p.size() >= 2 && p[0] == first && p[1] == second &&
         std::all_of(p.begin() + 2, p.end(), [](unsigned k) { return k == 1; });
}

} // namespace pair_detail

/// First clause of the classification that holds, as "1" .. "6", "7:<spec>",
/// or "none". Clause 7 consults the fixture rows of the exceptional group.
inline std::string symbolic_clause(const IntPartition &lambda, GroupFacts &facts,
                                   const std::vector<FixtureTable> &tables = {})
{
  const unsigned n = lambda.n();
  const auto r = static_cast<unsigned>(lambda.num_parts());
  if (facts.symmetric_or_alternating())
    return "1";
  if (r == 1 && facts.transitive())
    return "2";
  if (2 * r > n && pair_detail::is_hook(lambda, n - r + 1) && facts.homogeneous(n - r))
    return "3";
  if (n >= 4 && r == n - 2 && pair_detail::is_shape(lambda, 2, 2) && facts.transitive_on_tuples(4))
    return "4";
  if (n >= 5 && r == n - 3 && pair_detail::is_shape(lambda, 3, 2) && facts.transitive_on_tuples(5))
    return "5";
  const unsigned t = n - lambda.largest();
  if (r > 1 && 2 * t < n && facts.homogeneous(t) && facts.standard(lambda))
    return "6";
  if (auto spec = facts.exceptional()) {
    for (const auto &table : tables)
      if (table.spec == *spec && table.degree == n)
        if (auto e = table.expected(lambda); e && *e)
          return "7:" + *spec;
  }
  return "none";
}

/// One verdict per kernel type of rank < n, in integer_partitions order.
inline std::vector<PairVerdict> classify_all(const PermGroup &group, std::size_t cap = defaults::orbit_cap,
                                             const std::vector<FixtureTable> *tables = nullptr)
{
  std::vector<PairVerdict> out;
  std::optional<GroupFacts> facts;
  if (tables)
    facts.emplace(group, cap);
  for (const auto &lambda : integer_partitions(static_cast<unsigned>(group.degree()))) {
    if (lambda.is_all_ones())
      continue;
    auto v = is_sn_pair(lambda, group, cap);
    if (facts)
      v.clause = symbolic_clause(lambda, *facts, *tables);
    out.push_back(std::move(v));
  }
  return out;
}

struct FixtureMismatch
{
  IntPartition lambda;
  bool expected = false;
  bool computed = false;
  PairVerdict detail;
};

struct FixtureReport
{
  std::string group;
  unsigned degree = 0;
  std::size_t rows = 0;
  std::vector<FixtureMismatch> mismatches;
  std::vector<IntPartition> missing; // kernel types with no row

  bool ok() const { return mismatches.empty() && missing.empty(); }
};

inline FixtureReport verify_table(const FixtureTable &table, const std::string &data_dir = default_data_dir(),
                                  std::size_t cap = defaults::orbit_cap)
{
  auto group = build(table.spec, data_dir);
  if (group.degree() != table.degree)
    throw Error(ErrorKind::validation, table.spec + " has degree " + std::to_string(group.degree()) +
                                         ", fixture says " + std::to_string(table.degree));
  FixtureReport rep;
  rep.group = table.spec;
  rep.degree = table.degree;
  rep.rows = table.rows.size();
  for (const auto &row : table.rows) {
    auto v = is_sn_pair(row.lambda, group, cap);
    if (v.verdict != row.expect)
      rep.mismatches.push_back({row.lambda, row.expect, v.verdict, v});
  }
  for (const auto &lambda : integer_partitions(table.degree))
    if (!lambda.is_all_ones() && !table.expected(lambda))
      rep.missing.push_back(lambda);
  return rep;
}

inline std::vector<FixtureReport> verify_fixtures(const std::vector<FixtureTable> &tables,
                                                  const std::string &data_dir = default_data_dir(),
                                                  std::size_t cap = defaults::orbit_cap)
{
  std::vector<FixtureReport> out;
  for (const auto &t : tables)
    out.push_back(verify_table(t, data_dir, cap));
  return out;
}

// Independent sets ----------------------------------------------------------

/// No kernel of one map can be moved into a coarsening of another's.
inline bool is_independent(const std::vector<Transformation> &maps)
{
  for (const auto &a : maps)
    if (a.is_bijective() || a.degree() != maps.front().degree())
      throw Error(ErrorKind::invalid_argument, "independent sets need singular maps of one degree");
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (i != j && coarsening_feasible(maps[i].kernel_type(), maps[j].kernel_type()))
        return false;
  return true;
}

struct IndependentSetCheck
{
  bool closures_equal = false; // <A,G>\G == <A,S_n>\S_n by closure
  bool all_pairs = false;      // every (a,G) is a pair
  bool agree() const { return closures_equal == all_pairs; }
};

inline IndependentSetCheck independent_set_pair_theorem_check(const std::vector<Transformation> &maps,
                                                              const PermGroup &group,
                                                              std::size_t cap = defaults::closure_cap)
{
  if (!is_independent(maps))
    throw Error(ErrorKind::invalid_argument, "the set of maps is not independent");
  IndependentSetCheck out;
  auto sym = catalog_detail::symmetric(static_cast<unsigned>(group.degree()));
  out.closures_equal = generate_arc(maps, group, cap).same_elements(generate_arc(maps, sym, cap));
  out.all_pairs = std::all_of(maps.begin(), maps.end(), [&](const auto &a) { return is_sn_pair(a, group).verdict; });
  return out;
}

} // namespace parthom
