#pragma once

// JSON forms of the report types (nlohmann/json). Kept apart from the
// algorithm headers so those do not depend on a JSON library.

#include <json.hpp>

#include "bigint.hpp"
#include "homogeneity.hpp"
#include "sn_pairs.hpp"

namespace parthom {

namespace json_detail {

/// Exact integers: a JSON number when it fits in 64 bits, else a decimal string.
inline nlohmann::json big(const BigInt &v)
{
  if (auto u = to_u64(v))
    return *u;
  return v.str();
}

inline BigInt big_from(const nlohmann::json &j)
{
  if (j.is_string())
    return BigInt(j.get<std::string>());
  return BigInt(j.get<std::uint64_t>());
}

inline Method method_from(const std::string &s)
{
  for (auto m : {Method::orbit_bfs, Method::order_bound, Method::stabilizer_chain, Method::order_recognition,
                 Method::definitional})
    if (s == to_string(m))
      return m;
  throw Error(ErrorKind::parse, "unknown method \"" + s + "\"");
}

} // namespace json_detail

inline void to_json(nlohmann::json &j, const HomogeneityReport &r)
{
  j = nlohmann::json{{"group", r.group},
                     {"query", r.query},
                     {"verdict", r.verdict},
                     {"orbit_size", r.orbit_size ? nlohmann::json(*r.orbit_size) : nlohmann::json(nullptr)},
                     {"expected", json_detail::big(r.expected)},
                     {"method", to_string(r.method)}};
}

inline void from_json(const nlohmann::json &j, HomogeneityReport &r)
{
  r.group = j.at("group").get<std::string>();
  r.query = j.at("query").get<std::string>();
  r.verdict = j.at("verdict").get<bool>();
  if (j.at("orbit_size").is_null())
    r.orbit_size.reset();
  else
    r.orbit_size = j.at("orbit_size").get<std::uint64_t>();
  r.expected = json_detail::big_from(j.at("expected"));
  r.method = json_detail::method_from(j.at("method").get<std::string>());
}

inline void to_json(nlohmann::json &j, const PairVerdict &v)
{
  j = nlohmann::json{{"lambda", v.lambda.to_string()},
                     {"rank", v.rank},
                     {"verdict", v.verdict},
                     {"witness", v.witness()},
                     {"rank_test", v.rank_test},
                     {"lambda_test", v.lambda_test}};
  if (!v.clause.empty())
    j["clause"] = v.clause;
}

inline void from_json(const nlohmann::json &j, PairVerdict &v)
{
  v.lambda = IntPartition::parse(j.at("lambda").get<std::string>());
  v.rank = j.at("rank").get<unsigned>();
  v.verdict = j.at("verdict").get<bool>();
  v.rank_test = j.at("rank_test").get<HomogeneityReport>();
  v.lambda_test = j.at("lambda_test").get<HomogeneityReport>();
  v.clause = j.value("clause", std::string{});
}

inline void to_json(nlohmann::json &j, const FixtureReport &r)
{
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto &m : r.mismatches)
    mismatches.push_back({{"lambda", m.lambda.to_string()},
                          {"expected", m.expected},
                          {"computed", m.computed},
                          {"detail", m.detail}});
  nlohmann::json missing = nlohmann::json::array();
  for (const auto &l : r.missing)
    missing.push_back(l.to_string());
  j = nlohmann::json{{"group", r.group},   {"degree", r.degree},   {"rows", r.rows},
                     {"mismatches", mismatches}, {"missing", missing}};
}

inline void from_json(const nlohmann::json &j, FixtureReport &r)
{
  r.group = j.at("group").get<std::string>();
  r.degree = j.at("degree").get<unsigned>();
  r.rows = j.at("rows").get<std::size_t>();
  r.mismatches.clear();
  for (const auto &m : j.at("mismatches"))
    r.mismatches.push_back({IntPartition::parse(m.at("lambda").get<std::string>()), m.at("expected").get<bool>(),
                            m.at("computed").get<bool>(), m.at("detail").get<PairVerdict>()});
  r.missing.clear();
  for (const auto &l : j.at("missing"))
    r.missing.push_back(IntPartition::parse(l.get<std::string>()));
}

} // namespace parthom
