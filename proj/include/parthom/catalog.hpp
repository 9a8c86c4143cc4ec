#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "group_file.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

#ifndef PARTHOM_DATA_DIR
#define PARTHOM_DATA_DIR "data"
#endif

namespace parthom {

/// Bundled data directory; the PARTHOM_DATA environment variable wins.
inline std::string default_data_dir()
{
  if (const char *env = std::getenv("PARTHOM_DATA"); env && *env)
    return env;
  return PARTHOM_DATA_DIR;
}

enum class Family {
  symmetric,
  alternating,
  cyclic,
  dihedral,
  agl1,
  agammal1,
  psl2,
  pgl2,
  pgammal2,
  mathieu,
  file,
  fix_point_extension,
};

/// A named group: family plus parameter, written `s:5`, `pgl2:8`,
/// `m:12`, `file:path` or `fix+<spec>`.
struct CatalogSpec
{
  Family family = Family::symmetric;
  unsigned parameter = 1;
  std::string path;
  std::shared_ptr<const CatalogSpec> inner;

  static CatalogSpec parse(std::string_view text)
  {
    if (text.rfind("fix+", 0) == 0) {
      CatalogSpec spec;
      spec.family = Family::fix_point_extension;
      spec.inner = std::make_shared<const CatalogSpec>(parse(text.substr(4)));
      return spec;
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorKind::invalid_argument, "group spec must look like family:parameter, got \"" +
                                                 std::string(text) + "\"");
    std::string family(text.substr(0, colon));
    std::string arg(text.substr(colon + 1));
    CatalogSpec spec;
    if (family == "file") {
      if (arg.empty())
        throw Error(ErrorKind::invalid_argument, "file: spec needs a path");
      spec.family = Family::file;
      spec.path = arg;
      return spec;
    }
    static const std::map<std::string, Family> families = {
      {"s", Family::symmetric},      {"a", Family::alternating}, {"c", Family::cyclic},
      {"d", Family::dihedral},       {"agl1", Family::agl1},     {"agammal1", Family::agammal1},
      {"psl2", Family::psl2},        {"pgl2", Family::pgl2},     {"pgammal2", Family::pgammal2},
      {"m", Family::mathieu},
    };
    auto it = families.find(family);
    if (it == families.end())
      throw Error(ErrorKind::invalid_argument, "unknown group family \"" + family + "\"");
    spec.family = it->second;
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(arg, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != arg.size() || arg.empty() || value < 1 || value > 65535)
      throw Error(ErrorKind::invalid_argument, "bad parameter \"" + arg + "\" in group spec");
    spec.parameter = static_cast<unsigned>(value);
    spec.validate();
    return spec;
  }

  void validate() const
  {
    switch (family) {
    case Family::agl1:
    case Family::agammal1:
    case Family::psl2:
    case Family::pgl2:
    case Family::pgammal2:
      if (field_detail::prime_power(parameter).first == 0 || parameter > max_field_order)
        throw Error(ErrorKind::invalid_argument,
                    "q must be a prime power <= 32, got " + std::to_string(parameter));
      break;
    case Family::mathieu:
      if (parameter != 11 && parameter != 12 && parameter != 23 && parameter != 24)
        throw Error(ErrorKind::invalid_argument, "Mathieu degree must be 11, 12, 23 or 24");
      break;
    case Family::dihedral:
      if (parameter < 3)
        throw Error(ErrorKind::invalid_argument, "dihedral degree must be >= 3");
      break;
    default:
      break;
    }
  }

  std::string to_string() const
  {
    switch (family) {
    case Family::symmetric: return "s:" + std::to_string(parameter);
    case Family::alternating: return "a:" + std::to_string(parameter);
    case Family::cyclic: return "c:" + std::to_string(parameter);
    case Family::dihedral: return "d:" + std::to_string(parameter);
    case Family::agl1: return "agl1:" + std::to_string(parameter);
    case Family::agammal1: return "agammal1:" + std::to_string(parameter);
    case Family::psl2: return "psl2:" + std::to_string(parameter);
    case Family::pgl2: return "pgl2:" + std::to_string(parameter);
    case Family::pgammal2: return "pgammal2:" + std::to_string(parameter);
    case Family::mathieu: return "m:" + std::to_string(parameter);
    case Family::file: return "file:" + path;
    case Family::fix_point_extension: return "fix+" + inner->to_string();
    }
    return "?";
  }

  /// Conventional name, e.g. "PGL(2,8)" or "AGL(1,5)+fix".
  std::string display_name() const
  {
    auto p = std::to_string(parameter);
    switch (family) {
    case Family::symmetric: return "S" + p;
    case Family::alternating: return "A" + p;
    case Family::cyclic: return "C" + p;
    case Family::dihedral: return "D" + p;
    case Family::agl1: return "AGL(1," + p + ")";
    case Family::agammal1: return "AGammaL(1," + p + ")";
    case Family::psl2: return "PSL(2," + p + ")";
    case Family::pgl2: return "PGL(2," + p + ")";
    case Family::pgammal2: return "PGammaL(2," + p + ")";
    case Family::mathieu: return "M" + p;
    case Family::file: return path;
    case Family::fix_point_extension: return inner->display_name() + "+fix";
    }
    return "?";
  }
};

/// G acting on {1..n} and fixing the new point n+1.
inline PermGroup fix_point_extension(const PermGroup &group)
{
  std::vector<Permutation> gens;
  for (const auto &g : group.generators())
    gens.push_back(g.extended(group.degree() + 1));
  return PermGroup(group.degree() + 1, std::move(gens),
                   group.name().empty() ? "" : group.name() + "+fix");
}

namespace catalog_detail {

inline PermGroup symmetric(unsigned n)
{
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, "(1 2)"));
    std::vector<Point> cycle(n);
    for (unsigned i = 0; i < n; ++i)
      cycle[i] = static_cast<Point>((i + 1) % n);
    gens.push_back(Permutation::from_images(cycle));
  }
  return PermGroup(n, std::move(gens));
}

inline PermGroup alternating(unsigned n)
{
  std::vector<Permutation> gens;
  for (unsigned k = 3; k <= n; ++k)
    gens.push_back(Permutation::from_cycles(n, "(1 2 " + std::to_string(k) + ")"));
  return PermGroup(n, std::move(gens));
}

inline PermGroup cyclic(unsigned n)
{
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Permutation::from_images(cycle)});
}

inline PermGroup dihedral(unsigned n)
{
  std::vector<Point> rotation(n), reflection(n);
  for (unsigned i = 0; i < n; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % n);
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation::from_images(rotation), Permutation::from_images(reflection)});
}

/// Permutation of the field points (in enumeration order) induced by f.
inline Permutation field_map(const FiniteField &field, const std::function<unsigned(unsigned)> &f)
{
  const auto &elems = field.enumeration();
  std::vector<Point> images(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    images[i] = static_cast<Point>(field.index_of(f(elems[i])));
  return Permutation::from_images(std::move(images));
}

inline PermGroup affine(unsigned q, bool semilinear)
{
  FiniteField field(q);
  unsigned alpha = field.primitive_element();
  std::vector<Permutation> gens{
    field_map(field, [&](unsigned x) { return field.add(x, 1); }),
    field_map(field, [&](unsigned x) { return field.mul(x, alpha); }),
  };
  if (semilinear)
    gens.push_back(field_map(field, [&](unsigned x) { return field.frobenius(x); }));
  return PermGroup(q, std::move(gens));
}

/// Points 0..q-1 are the field elements in enumeration order; point q is
/// infinity. `f` returns q for infinity.
inline Permutation projective_map(const FiniteField &field, const std::function<unsigned(unsigned, bool)> &f)
{
  const unsigned q = field.order();
  const auto &elems = field.enumeration();
  std::vector<Point> images(q + 1);
  for (unsigned i = 0; i <= q; ++i) {
    bool infinite = i == q;
    unsigned image = f(infinite ? 0 : elems[i], infinite);
    images[i] = static_cast<Point>(image == q ? q : field.index_of(image));
  }
  return Permutation::from_images(std::move(images));
}

enum class Projective { psl, pgl, pgammal };

inline PermGroup projective(unsigned q, Projective kind)
{
  FiniteField field(q);
  const unsigned inf = q;
  unsigned alpha = field.primitive_element();
  bool odd = field.characteristic() != 2;
  bool special = kind == Projective::psl && odd;
  unsigned scalar = special ? field.mul(alpha, alpha) : alpha;

  std::vector<Permutation> gens{
    projective_map(field, [&](unsigned x, bool infinite) { return infinite ? inf : field.add(x, 1); }),
    projective_map(field, [&](unsigned x, bool infinite) { return infinite ? inf : field.mul(x, scalar); }),
    // x -> -1/x has determinant 1, so it lies in PSL for every q; for PGL
    // the same element works together with x -> alpha x.
    projective_map(field, [&](unsigned x, bool infinite) {
      if (infinite)
        return 0u;
      if (x == 0)
        return inf;
      return field.neg(field.inv(x));
    }),
  };
  if (kind == Projective::pgammal)
    gens.push_back(projective_map(field, [&](unsigned x, bool infinite) {
      return infinite ? inf : field.frobenius(x);
    }));
  return PermGroup(q + 1, std::move(gens));
}

} // namespace catalog_detail

inline PermGroup build(const CatalogSpec &spec, const std::string &data_dir = default_data_dir())
{
  spec.validate();
  PermGroup group;
  switch (spec.family) {
  case Family::symmetric: group = catalog_detail::symmetric(spec.parameter); break;
  case Family::alternating: group = catalog_detail::alternating(spec.parameter); break;
  case Family::cyclic: group = catalog_detail::cyclic(spec.parameter); break;
  case Family::dihedral: group = catalog_detail::dihedral(spec.parameter); break;
  case Family::agl1: group = catalog_detail::affine(spec.parameter, false); break;
  case Family::agammal1: group = catalog_detail::affine(spec.parameter, true); break;
  case Family::psl2: group = catalog_detail::projective(spec.parameter, catalog_detail::Projective::psl); break;
  case Family::pgl2: group = catalog_detail::projective(spec.parameter, catalog_detail::Projective::pgl); break;
  case Family::pgammal2:
    group = catalog_detail::projective(spec.parameter, catalog_detail::Projective::pgammal);
    break;
  case Family::mathieu:
    group = read_group_file(data_dir + "/groups/m" + std::to_string(spec.parameter) + ".grp");
    if (group.degree() != spec.parameter)
      throw Error(ErrorKind::validation, "Mathieu data file has degree " + std::to_string(group.degree()));
    break;
  case Family::file: group = read_group_file(spec.path); break;
  case Family::fix_point_extension: group = fix_point_extension(build(*spec.inner, data_dir)); break;
  }
  group.set_name(spec.display_name());
  return group;
}

inline PermGroup build(std::string_view spec, const std::string &data_dir = default_data_dir())
{
  return build(CatalogSpec::parse(spec), data_dir);
}

/// Distinct-looking catalog specs of degree <= max_degree (symmetric and
/// alternating groups included; semilinear families only for non-prime q
/// since they coincide with the linear ones otherwise). Mathieu groups are
/// listed when their degree fits.
inline std::vector<std::string> catalog_sweep(unsigned max_degree, bool include_extensions = true)
{
  std::vector<std::string> specs;
  for (unsigned n = 2; n <= max_degree; ++n) {
    specs.push_back("s:" + std::to_string(n));
    if (n >= 3)
      specs.push_back("a:" + std::to_string(n));
    specs.push_back("c:" + std::to_string(n));
    if (n >= 3)
      specs.push_back("d:" + std::to_string(n));
  }
  for (unsigned q = 2; q <= max_field_order; ++q) {
    auto [p, d] = field_detail::prime_power(q);
    if (p == 0)
      continue;
    if (q <= max_degree) {
      specs.push_back("agl1:" + std::to_string(q));
      if (d > 1)
        specs.push_back("agammal1:" + std::to_string(q));
    }
    if (q + 1 <= max_degree) {
      specs.push_back("psl2:" + std::to_string(q));
      specs.push_back("pgl2:" + std::to_string(q));
      if (d > 1)
        specs.push_back("pgammal2:" + std::to_string(q));
    }
  }
  for (unsigned m : {11u, 12u, 23u, 24u})
    if (m <= max_degree)
      specs.push_back("m:" + std::to_string(m));
  if (include_extensions) {
    for (const char *inner : {"agl1:5", "psl2:5", "pgl2:5", "psl2:8", "pgl2:8", "pgammal2:8", "c:5", "d:5"}) {
      auto spec = CatalogSpec::parse(std::string("fix+") + inner);
      unsigned deg = inner[0] == 'a' || inner[0] == 'c' || inner[0] == 'd' ? 6 : (std::string(inner).find(":8") != std::string::npos ? 10 : 7);
      if (deg <= max_degree)
        specs.push_back(spec.to_string());
    }
  }
  return specs;
}

} // namespace parthom
