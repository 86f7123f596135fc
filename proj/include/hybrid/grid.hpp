#ifndef HYBRID_GRID_HPP
#define HYBRID_GRID_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hybrid/errors.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

namespace hybrid {

/// Seed pair (a, b); b may be the symbol "p", resolved per parameter set.
struct SeedSpec {
  Integer a;
  Integer b;
  bool b_is_p = false;

  [[nodiscard]] Integer resolve_b(const Integer& p) const { return b_is_p ? p : b; }
};

/**
 * Cartesian parameter grid for the identity suite.
 *
 * Text format, one key per line, '#' starts a comment:
 *
 *   p=1,2,3
 *   q=-2,-1,1,2
 *   ab=0:1,2:p,1:1,2:3
 *   nmax=10
 *   rmax=6
 *   extended=false
 *
 * Missing keys keep their defaults. An empty list ("p=") yields an empty grid.
 * q=0 anywhere is a configuration error; (p, q) pairs with p^2 + 4q = 0 are
 * skipped.
 */
struct GridConfig {
  std::vector<Integer> p{1, 2, 3};
  std::vector<Integer> q{-2, -1, 1, 2};
  std::vector<SeedSpec> ab{{0, 1, false}, {2, 0, true}, {1, 1, false}, {2, 3, false}};
  std::int64_t nmax = 10;
  std::int64_t rmax = 6;
  bool extended = false;

  void validate() const {
    for (const auto& qv : q) {
      if (qv == 0) throw ConfigError("grid contains q=0");
    }
    if (nmax < 0) throw ConfigError("nmax must be >= 0");
    if (rmax < 0) throw ConfigError("rmax must be >= 0");
  }

  /// Every valid (p, q) pair, p-major, with Fibonacci seeds.
  [[nodiscard]] std::vector<HoradamParams> pq_params() const {
    validate();
    std::vector<HoradamParams> out;
    for (const auto& pv : p) {
      for (const auto& qv : q) {
        auto params = HoradamParams::fibonacci(pv, qv);
        if (params.valid()) out.push_back(std::move(params));
      }
    }
    return out;
  }

  /// Every valid (p, q, a, b), ordered p, q, then seed.
  [[nodiscard]] std::vector<HoradamParams> seeded_params() const {
    std::vector<HoradamParams> out;
    for (const auto& base : pq_params()) {
      for (const auto& seed : ab) {
        out.push_back({base.p, base.q, seed.a, seed.resolve_b(base.p)});
      }
    }
    return out;
  }

  static GridConfig parse(std::string_view text);
  static GridConfig load(const std::string& path);
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline Integer grid_integer(const std::string& token, std::string_view key) {
  try {
    const Rational r = Rational::parse(token);
    if (!r.is_integer()) throw ParseError("not an integer");
    return r.numerator();
  } catch (const ParseError&) {
    throw ConfigError("grid key '" + std::string(key) + "': bad integer '" + token + "'");
  }
}

inline std::int64_t grid_count(const std::string& token, std::string_view key) {
  const Integer v = grid_integer(token, key);
  if (v > 1'000'000 || v < -1'000'000) throw ConfigError("grid key '" + std::string(key) + "' out of range");
  return v.convert_to<std::int64_t>();
}

}  // namespace detail

inline GridConfig GridConfig::parse(std::string_view text) {
  GridConfig grid;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = detail::trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("grid line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = detail::trim(std::string_view(content).substr(0, eq));
    const std::string value = detail::trim(std::string_view(content).substr(eq + 1));

    if (key == "p" || key == "q") {
      std::vector<Integer> values;
      for (const auto& tok : detail::split(value, ',')) values.push_back(detail::grid_integer(tok, key));
      (key == "p" ? grid.p : grid.q) = std::move(values);
    } else if (key == "ab") {
      grid.ab.clear();
      for (const auto& tok : detail::split(value, ',')) {
        const auto parts = detail::split(tok, ':');
        if (parts.size() != 2) throw ConfigError("grid key 'ab': expected a:b, got '" + tok + "'");
        SeedSpec seed{detail::grid_integer(parts[0], key), 0, parts[1] == "p"};
        if (!seed.b_is_p) seed.b = detail::grid_integer(parts[1], key);
        grid.ab.push_back(std::move(seed));
      }
    } else if (key == "nmax") {
      grid.nmax = detail::grid_count(value, key);
    } else if (key == "rmax") {
      grid.rmax = detail::grid_count(value, key);
    } else if (key == "extended") {
      if (value == "true" || value == "1") {
        grid.extended = true;
      } else if (value == "false" || value == "0") {
        grid.extended = false;
      } else {
        throw ConfigError("grid key 'extended': expected true/false");
      }
    } else {
      throw ConfigError("grid line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  grid.validate();
  return grid;
}

inline GridConfig GridConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open grid file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace hybrid

#endif  // HYBRID_GRID_HPP
