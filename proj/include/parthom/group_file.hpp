#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"

namespace parthom {

/// Reads the plain-text group format:
///
///     # comment
///     degree 12
///     img: 2 3 1 4 5 6 7 8 9 10 11 12
///     (1 2)(3 4)
///
/// Malformed lines raise ErrorKind::parse with the 1-based line number.
inline PermGroup parse_group_text(const std::string &text, const std::string &source = "<text>")
{
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;

  auto fail = [&](const std::string &why) -> Error {
    return Error(ErrorKind::parse, source + ":" + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    if (degree == 0) {
      std::istringstream words(line);
      std::string keyword;
      long n = 0;
      std::string extra;
      if (!(words >> keyword) || keyword != "degree" || !(words >> n) || (words >> extra) || n < 1 ||
          n > static_cast<long>(max_degree))
        throw fail("expected `degree <n>` with n >= 1, got \"" + line + "\"");
      degree = static_cast<std::size_t>(n);
      continue;
    }

    try {
      if (line.rfind("img:", 0) == 0) {
        std::istringstream words(line.substr(4));
        std::vector<long> images;
        std::string word;
        while (words >> word) {
          std::size_t used = 0;
          long v = 0;
          try {
            v = std::stol(word, &used);
          } catch (const std::exception &) {
            used = 0;
          }
          if (used != word.size())
            throw fail("not an integer: \"" + word + "\"");
          images.push_back(v);
        }
        if (images.size() != degree)
          throw fail("expected " + std::to_string(degree) + " images, got " + std::to_string(images.size()));
        gens.push_back(Permutation::from_one_based(images));
      } else if (line.front() == '(') {
        gens.push_back(Permutation::from_cycles(degree, line));
      } else {
        throw fail("expected `img: ...` or cycle notation, got \"" + line + "\"");
      }
    } catch (const Error &err) {
      if (err.what() && std::string(err.what()).rfind(source + ":", 0) == 0)
        throw;
      throw fail(err.what());
    }
  }
  if (degree == 0)
    throw Error(ErrorKind::parse, source + ": missing `degree <n>` line");
  return PermGroup(degree, std::move(gens));
}

inline PermGroup read_group_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::invalid_argument, "cannot open group file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path);
}

inline std::string format_group_text(const PermGroup &group, bool cycles = true)
{
  std::ostringstream out;
  if (!group.name().empty())
    out << "# " << group.name() << "\n";
  out << "degree " << group.degree() << "\n";
  for (const auto &g : group.generators())
    out << (cycles ? g.to_cycle_string() : "img: " + g.to_image_string()) << "\n";
  return out.str();
}

} // namespace parthom
