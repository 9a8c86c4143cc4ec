#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "homogeneity.hpp"

namespace parthom {

/// One manifest record, e.g.
///
///     name=M12 spec=m:12 degree=12 expected_order=95040 checks=transitive,5-transitive,not-6-transitive
struct ManifestEntry
{
  std::string name;
  std::string spec;
  std::size_t degree = 0;
  BigInt expected_order = 0;
  std::vector<std::string> checks;
};

inline std::vector<ManifestEntry> parse_manifest(const std::string &text, const std::string &source = "<text>")
{
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream words(raw.substr(0, raw.find('#')));
    std::map<std::string, std::string> fields;
    std::string word;
    while (words >> word) {
      auto eq = word.find('=');
      if (eq == std::string::npos || eq == 0)
        throw Error(ErrorKind::parse, source + ":" + std::to_string(line_no) + ": expected key=value, got \"" + word + "\"");
      fields[word.substr(0, eq)] = word.substr(eq + 1);
    }
    if (fields.empty())
      continue;
    for (const char *key : {"name", "spec", "degree", "expected_order"})
      if (!fields.count(key))
        throw Error(ErrorKind::parse, source + ":" + std::to_string(line_no) + ": missing " + key);
    ManifestEntry e;
    e.name = fields["name"];
    e.spec = fields["spec"];
    try {
      e.degree = std::stoul(fields["degree"]);
      e.expected_order = BigInt(fields["expected_order"]);
    } catch (const std::exception &) {
      throw Error(ErrorKind::parse, source + ":" + std::to_string(line_no) + ": bad number");
    }
    std::istringstream checks(fields["checks"]);
    std::string c;
    while (std::getline(checks, c, ','))
      if (!c.empty())
        e.checks.push_back(c);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ManifestEntry> read_manifest(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::invalid_argument, "cannot open manifest " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path);
}

struct CheckResult
{
  std::string name;
  bool ok = false;
  std::string detail;
};

struct EntryValidation
{
  std::string name;
  std::string spec;
  std::vector<CheckResult> checks;

  bool ok() const
  {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.ok; });
  }
};

namespace validation_detail {

/// Evaluates "transitive", "<t>-transitive", "<t>-homogeneous",
/// "set-transitive", each optionally prefixed by "not-".
inline CheckResult evaluate(const PermGroup &g, const std::string &check, std::size_t cap)
{
  bool negate = check.rfind("not-", 0) == 0;
  std::string body = negate ? check.substr(4) : check;
  bool value = false;
  if (body == "transitive") {
    value = g.is_transitive();
  } else if (body == "set-transitive") {
    value = is_set_transitive(g, cap);
  } else {
    auto dash = body.find('-');
    if (dash == std::string::npos)
      throw Error(ErrorKind::parse, "unknown check \"" + check + "\"");
    unsigned t = 0;
    try {
      t = static_cast<unsigned>(std::stoul(body.substr(0, dash)));
    } catch (const std::exception &) {
      throw Error(ErrorKind::parse, "unknown check \"" + check + "\"");
    }
    auto kind = body.substr(dash + 1);
    if (kind == "transitive")
      value = is_t_transitive(g, t, cap);
    else if (kind == "homogeneous")
      value = is_t_homogeneous(g, t, cap);
    else
      throw Error(ErrorKind::parse, "unknown check \"" + check + "\"");
  }
  bool ok = negate ? !value : value;
  return {check, ok, ok ? "" : "property evaluated to " + std::string(value ? "true" : "false")};
}

} // namespace validation_detail

inline EntryValidation validate_entry(const ManifestEntry &entry, const std::string &data_dir,
                                      std::size_t cap = defaults::orbit_cap)
{
  EntryValidation out{entry.name, entry.spec, {}};
  PermGroup g;
  try {
    g = build(entry.spec, data_dir);
  } catch (const Error &e) {
    out.checks.push_back({"build", false, e.what()});
    return out;
  }
  out.checks.push_back({"degree", g.degree() == entry.degree,
                        "degree " + std::to_string(g.degree()) + ", expected " + std::to_string(entry.degree)});
  auto order = g.order();
  out.checks.push_back({"order", order == entry.expected_order,
                        "order " + order.str() + ", expected " + entry.expected_order.str()});
  for (const auto &c : entry.checks)
    out.checks.push_back(validation_detail::evaluate(g, c, cap));
  for (auto &c : out.checks)
    if (c.ok && (c.name == "degree" || c.name == "order"))
      c.detail.clear();
  return out;
}

inline std::string default_manifest_path() { return default_data_dir() + "/groups/manifest.txt"; }

/// Checks every manifest record; a failed record is reported, not thrown.
inline std::vector<EntryValidation> validate_catalog(const std::string &data_dir = default_data_dir(),
                                                     std::size_t cap = defaults::orbit_cap)
{
  std::vector<EntryValidation> out;
  for (const auto &entry : read_manifest(data_dir + "/groups/manifest.txt"))
    out.push_back(validate_entry(entry, data_dir, cap));
  return out;
}

} // namespace parthom
