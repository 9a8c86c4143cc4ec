// Command-line front end. Exit status: 0 when the requested verdicts were
// computed (whatever they are), 1 when fixtures or the catalog disagree
// with the computation, 2 for usage and data errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "parthom/parthom.hpp"
#include "parthom/reports.hpp"

using nlohmann::json;
using namespace parthom;

namespace {

struct Common
{
  std::string data_dir = default_data_dir();
  std::size_t cap = 0; // 0: library defaults
  bool as_json = false;

  std::size_t orbit_cap() const { return cap ? cap : defaults::orbit_cap; }
  std::size_t closure_cap() const { return cap ? cap : defaults::closure_cap; }
};

void print(const Common &c, const json &j, const std::string &text)
{
  if (c.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string report_line(const HomogeneityReport &r)
{
  std::string s = r.query + ": " + yes_no(r.verdict) + " (" + to_string(r.method);
  if (r.orbit_size)
    s += ", orbit " + std::to_string(*r.orbit_size) + " of " + r.expected.str();
  else
    s += ", expected " + r.expected.str();
  return s + ")\n";
}

int group_order(const Common &c, const std::string &spec)
{
  auto g = build(spec, c.data_dir);
  json j{{"group", g.name()},
         {"degree", g.degree()},
         {"order", json_detail::big(g.order())},
         {"transitive", g.is_transitive()},
         {"generators", json::array()}};
  for (const auto &p : g.generators())
    j["generators"].push_back(p.to_cycle_string());
  print(c, j,
        g.name() + ": degree " + std::to_string(g.degree()) + ", order " + g.order().str() +
          (g.is_transitive() ? ", transitive\n" : ", intransitive\n"));
  return 0;
}

template <class Action>
int orbit_of(const Common &c, const PermGroup &g, const typename Action::value_type &seed, bool list)
{
  auto orb = orbit(g, seed, Action{}, c.orbit_cap());
  std::vector<std::string> rendered;
  if (list) {
    for (const auto &x : orb)
      rendered.push_back(Action::render(x));
    std::sort(rendered.begin(), rendered.end());
  }
  json j{{"group", g.name()}, {"seed", Action::render(seed)}, {"orbit_size", orb.size()}};
  if (list)
    j["elements"] = rendered;
  std::string text = "orbit of " + Action::render(seed) + " under " + g.name() + ": " + std::to_string(orb.size()) + "\n";
  for (const auto &r : rendered)
    text += "  " + r + "\n";
  print(c, j, text);
  return 0;
}

std::vector<Point> parse_points(const std::string &text, std::size_t degree)
{
  std::vector<Point> pts;
  for (long v : detail::parse_int_list(text, ',')) {
    if (v < 1 || v > static_cast<long>(degree))
      throw Error(ErrorKind::invalid_argument, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
    pts.push_back(static_cast<Point>(v - 1));
  }
  return pts;
}

int check_homog(const Common &c, const std::string &spec, std::optional<unsigned> t)
{
  auto g = build(spec, c.data_dir);
  json j{{"group", g.name()}};
  std::string text;
  if (t) {
    auto h = t_homogeneity(g, *t, c.orbit_cap());
    auto tr = t_transitivity(g, *t, c.orbit_cap());
    j["homogeneous"] = h;
    j["transitive"] = tr;
    text += report_line(h) + report_line(tr);
  } else {
    bool st = is_set_transitive(g, c.orbit_cap());
    unsigned e = exact_homogeneity_degree(g, c.orbit_cap());
    j["set_transitive"] = st;
    j["exact_homogeneity_degree"] = e;
    text += g.name() + ": set-transitive " + yes_no(st) + ", homogeneous up to t = " + std::to_string(e) + "\n";
  }
  print(c, j, text);
  return 0;
}

int check_lambda(const Common &c, const std::string &spec, const std::string &lambda_text)
{
  auto g = build(spec, c.data_dir);
  auto lambda = IntPartition::parse(lambda_text);
  auto h = lambda_homogeneity(g, lambda, c.orbit_cap());
  auto t = lambda_transitivity(g, lambda, c.orbit_cap());
  json j{{"group", g.name()}, {"lambda", lambda.to_string()}, {"homogeneous", h}, {"transitive", t}};
  std::string text = report_line(h) + report_line(t);
  if (!lambda.is_single_part()) {
    bool standard = is_standard_pair(g, lambda, c.orbit_cap());
    j["standard"] = standard;
    text += "standard pair: " + yes_no(standard) + "\n";
  }
  auto behavior = t.verdict ? LambdaBehavior::transitive
                            : (h.verdict ? LambdaBehavior::homogeneous_only : LambdaBehavior::neither);
  j["behavior"] = to_string(behavior);
  text += "behavior: " + std::string(to_string(behavior)) + "\n";
  print(c, j, text);
  return 0;
}

std::string verdict_line(const PairVerdict &v)
{
  std::string s = v.lambda.to_string() + "  " + yes_no(v.verdict);
  if (!v.verdict)
    s += "  (" + v.witness() + ")";
  if (!v.clause.empty())
    s += "  clause " + v.clause;
  return s + "\n";
}

int check_pair(const Common &c, const std::string &spec, const std::string &lambda_text, const std::string &map_text)
{
  auto g = build(spec, c.data_dir);
  if (lambda_text.empty() == map_text.empty())
    throw Error(ErrorKind::invalid_argument, "give exactly one of --lambda or --map");
  PairVerdict v = map_text.empty() ? is_sn_pair(IntPartition::parse(lambda_text), g, c.orbit_cap())
                                   : is_sn_pair(Transformation::parse(map_text), g, c.orbit_cap());
  json j = v;
  j["group"] = g.name();
  print(c, j, g.name() + " " + verdict_line(v) + report_line(v.rank_test) +
                     (v.rank_test.verdict ? report_line(v.lambda_test) : ""));
  return 0;
}

int classify(const Common &c, const std::string &spec, const std::string &fixture_path)
{
  auto g = build(spec, c.data_dir);
  auto tables = read_fixtures(fixture_path.empty() ? c.data_dir + "/fixtures/sympairs.txt" : fixture_path);
  auto verdicts = classify_all(g, c.orbit_cap(), &tables);
  std::size_t count = 0;
  json rows = json::array();
  std::string text;
  for (const auto &v : verdicts) {
    count += v.verdict;
    rows.push_back(v);
    text += verdict_line(v);
  }
  json j{{"group", g.name()}, {"rows", rows}, {"true_count", count}, {"total", verdicts.size()}};
  text = g.name() + ": " + std::to_string(count) + " of " + std::to_string(verdicts.size()) + " kernel types give pairs\n" + text;
  print(c, j, text);
  return 0;
}

int verify(const Common &c, const std::string &fixture_path, const std::string &only)
{
  auto tables = read_fixtures(fixture_path.empty() ? c.data_dir + "/fixtures/sympairs.txt" : fixture_path);
  if (!only.empty()) {
    std::erase_if(tables, [&](const auto &t) { return t.spec != only; });
    if (tables.empty())
      throw Error(ErrorKind::invalid_argument, "no fixture table for " + only);
  }
  auto reports = verify_fixtures(tables, c.data_dir, c.orbit_cap());
  bool ok = true;
  json j = json::array();
  std::string text;
  for (const auto &r : reports) {
    ok = ok && r.ok();
    j.push_back(r);
    text += r.group + ": " + std::to_string(r.rows) + " rows, " + std::to_string(r.mismatches.size()) + " mismatches\n";
    for (const auto &m : r.mismatches)
      text += "  MISMATCH " + m.lambda.to_string() + ": expected " + yes_no(m.expected) + ", computed " +
              yes_no(m.computed) + (m.computed ? "" : " (" + m.detail.witness() + ")") + "\n    " +
              report_line(m.detail.rank_test) +
              (m.detail.rank_test.verdict ? "    " + report_line(m.detail.lambda_test) : "");
    for (const auto &l : r.missing)
      text += "  MISSING row for " + l.to_string() + "\n";
  }
  print(c, j, text);
  return ok ? 0 : 1;
}

int oracle_semigroup(const Common &c, const std::string &spec, const std::string &map_text)
{
  auto g = build(spec, c.data_dir);
  auto a = Transformation::parse(map_text);
  auto sym = build("s:" + std::to_string(g.degree()), c.data_dir);
  std::cerr << "closing <a,G>\\G ...\n";
  auto left = generate_arc(a, g, c.closure_cap());
  std::cerr << "closing <a,S_n>\\S_n ...\n";
  auto right = generate_arc(a, sym, c.closure_cap());
  bool equal = left.same_elements(right);
  auto v = is_sn_pair(a, g, c.orbit_cap());
  json j{{"group", g.name()},
         {"map", a.to_string()},
         {"size_with_group", left.size()},
         {"size_with_symmetric", right.size()},
         {"equal", equal},
         {"pair_verdict", v.verdict}};
  print(c, j,
        "|<a,G>\\G| = " + std::to_string(left.size()) + ", |<a,S_n>\\S_n| = " + std::to_string(right.size()) +
          ", equal " + yes_no(equal) + ", pair verdict " + yes_no(v.verdict) + "\n");
  return 0;
}

int validate(const Common &c)
{
  auto results = validate_catalog(c.data_dir, c.orbit_cap());
  bool ok = true;
  json j = json::array();
  std::string text;
  for (const auto &e : results) {
    ok = ok && e.ok();
    json checks = json::array();
    for (const auto &ch : e.checks)
      checks.push_back({{"check", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    j.push_back({{"name", e.name}, {"spec", e.spec}, {"ok", e.ok()}, {"checks", checks}});
    text += (e.ok() ? "ok    " : "FAIL  ") + e.name + " (" + e.spec + ")\n";
    for (const auto &ch : e.checks)
      if (!ch.ok)
        text += "      " + ch.name + ": " + ch.detail + "\n";
  }
  print(c, j, text);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Partition homogeneity of permutation groups and S_n-pairs"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.as_json, "Machine-readable output");
  app.add_option("--cap", common.cap, "Orbit and closure size cap");
  app.add_option("--data", common.data_dir, "Data directory (default: $PARTHOM_DATA or the bundled one)");

  std::string spec, lambda, map, fixtures, only, point, subset, tuple, partition, ordered;
  std::optional<unsigned> t;
  bool list = false, all = false;

  auto *order_cmd = app.add_subcommand("group-order", "Degree and order of a group");
  order_cmd->add_option("--group", spec, "Group spec, e.g. pgl2:8")->required();

  auto *orbit_cmd = app.add_subcommand("orbit", "Orbit of a point, subset, tuple or set partition");
  orbit_cmd->add_option("--group", spec)->required();
  auto *seed = orbit_cmd->add_option_group("seed");
  seed->add_option("--point", point);
  seed->add_option("--subset", subset, "e.g. 1,2");
  seed->add_option("--tuple", tuple, "e.g. 1,2,3");
  seed->add_option("--partition", partition, "e.g. {1,2|3,4|5}");
  seed->add_option("--ordered", ordered, "e.g. [1,2|3,4|5]");
  seed->require_option(1);
  orbit_cmd->add_flag("--list", list, "Print the orbit elements");

  auto *homog_cmd = app.add_subcommand("check-homog", "t-homogeneity and t-transitivity, or set-transitivity");
  homog_cmd->add_option("--group", spec)->required();
  homog_cmd->add_option("--t", t, "Omit for set-transitivity and the exact homogeneity degree");

  auto *lambda_cmd = app.add_subcommand("check-lambda", "lambda-homogeneity, lambda-transitivity, standardness");
  lambda_cmd->add_option("--group", spec)->required();
  lambda_cmd->add_option("--lambda", lambda)->required();

  auto *pair_cmd = app.add_subcommand("check-pair", "Decide whether (a, G) is an S_n-pair");
  pair_cmd->add_option("--group", spec)->required();
  pair_cmd->add_option("--lambda", lambda, "Kernel type of a");
  pair_cmd->add_option("--map", map, "The map a as 1-based images, e.g. 1,1,3,4,5");

  auto *classify_cmd = app.add_subcommand("classify", "Pair verdict for every kernel type");
  classify_cmd->add_option("--group", spec)->required();
  classify_cmd->add_option("--fixtures", fixtures, "Fixture file consulted for the symbolic clause");

  auto *verify_cmd = app.add_subcommand("verify-fixtures", "Compare fixture tables with the computation");
  verify_cmd->add_option("--file", fixtures);
  verify_cmd->add_option("--group", only, "Only the table for this spec");
  verify_cmd->add_flag("--all", all, "Every table (the default)");

  auto *oracle_cmd = app.add_subcommand("oracle-semigroup", "Compare <a,G>\\G with <a,S_n>\\S_n by closure");
  oracle_cmd->add_option("--group", spec)->required();
  oracle_cmd->add_option("--map", map)->required();

  auto *validate_cmd = app.add_subcommand("validate-catalog", "Check bundled groups against the manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (order_cmd->parsed())
      return group_order(common, spec);
    if (orbit_cmd->parsed()) {
      auto g = build(spec, common.data_dir);
      if (!point.empty()) {
        auto p = parse_points(point, g.degree());
        if (p.size() != 1)
          throw Error(ErrorKind::invalid_argument, "--point takes one point");
        return orbit_of<PointAction>(common, g, p.front(), list);
      }
      if (!subset.empty()) {
        require_mask_degree(g.degree());
        return orbit_of<SubsetAction>(common, g, points_mask(parse_points(subset, g.degree())), list);
      }
      if (!tuple.empty())
        return orbit_of<TupleAction>(common, g, parse_points(tuple, g.degree()), list);
      if (!partition.empty()) {
        auto p = SetPartition::parse(partition);
        if (p.degree() != g.degree())
          throw Error(ErrorKind::degree_mismatch, "partition covers " + std::to_string(p.degree()) + " points");
        return orbit_of<SetPartitionAction>(common, g, p, list);
      }
      auto p = OrderedSetPartition::parse(ordered);
      if (p.degree() != g.degree())
        throw Error(ErrorKind::degree_mismatch, "partition covers " + std::to_string(p.degree()) + " points");
      return orbit_of<OrderedPartitionAction>(common, g, p, list);
    }
    if (homog_cmd->parsed())
      return check_homog(common, spec, t);
    if (lambda_cmd->parsed())
      return check_lambda(common, spec, lambda);
    if (pair_cmd->parsed())
      return check_pair(common, spec, lambda, map);
    if (classify_cmd->parsed())
      return classify(common, spec, fixtures);
    if (verify_cmd->parsed())
      return verify(common, fixtures, only);
    if (oracle_cmd->parsed())
      return oracle_semigroup(common, spec, map);
    if (validate_cmd->parsed())
      return validate(common);
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << " (cap " << e.cap() << "; raise it with --cap)\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  }
  return 2;
}
