#pragma once
// Reference fixture for the composition table, and verification of the
// enumeration-derived operation against it.
//
// The fixture is a transcription of the published 16x16 operation table.
// It ships in two identical copies — data/star_table.txt for external
// tooling and an embedded string for the library and tests — kept in sync
// by a test.

#include <array>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slcd/trilateral.hpp"

namespace slcd {

// Expected composition results; nullopt = expected undefined (blank cell).
struct StarFixture {
  int version = 0;
  std::array<StarResult, 256> expected{};  // index major*16 + minor

  const StarResult& at(int major_value, int minor_value) const {
    return expected.at(static_cast<std::size_t>(major_value) * 16 +
                       static_cast<std::size_t>(minor_value));
  }

  int defined_count() const {
    int n = 0;
    for (const StarResult& r : expected)
      if (r.has_value()) ++n;
    return n;
  }
};

class FixtureError : public std::runtime_error {
 public:
  FixtureError(std::size_t line, const std::string& message)
      : std::runtime_error("star table fixture, line " + std::to_string(line) +
                           ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline int parse_form_value(std::string_view token, std::size_t lineno) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FixtureError(lineno,
                       "expected a number, got \"" + std::string(token) + "\"");
  if (value < 0 || value > 15)
    throw FixtureError(lineno, "form value " + std::to_string(value) +
                                   " outside 0..15");
  return value;
}

}  // namespace detail

// Parse the fixture text format:
//
//   version 1
//   <major> <minor> -> <v>[,<v>...]
//
// '#' starts a comment; blank lines are ignored; pairs not listed are
// expected to be undefined. Malformed input raises FixtureError with the
// offending line number.
inline StarFixture parse_star_fixture(std::string_view text) {
  StarFixture fx;
  bool have_version = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (!have_version) {
      std::istringstream in{std::string(line)};
      std::string word;
      int v = 0;
      std::string extra;
      if (!(in >> word >> v) || word != "version" || v < 1 || (in >> extra))
        throw FixtureError(lineno, "expected \"version <n>\" first");
      fx.version = v;
      have_version = true;
      continue;
    }

    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw FixtureError(lineno, "expected \"<major> <minor> -> <values>\"");

    std::istringstream head{std::string(line.substr(0, arrow))};
    int a = 0, b = 0;
    std::string extra;
    if (!(head >> a >> b) || (head >> extra))
      throw FixtureError(lineno, "expected two form values before \"->\"");
    if (a < 0 || a > 15 || b < 0 || b > 15)
      throw FixtureError(lineno, "form value outside 0..15");

    FormSet set;
    std::string_view rest = line.substr(arrow + 2);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view token =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      set.insert(detail::parse_form_value(token, lineno));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }

    StarResult& slot = fx.expected[static_cast<std::size_t>(a) * 16 +
                                   static_cast<std::size_t>(b)];
    if (slot.has_value())
      throw FixtureError(lineno, "duplicate entry for pair (" +
                                     std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
    slot = set;
  }
  if (!have_version) throw FixtureError(lineno, "missing version line");
  return fx;
}

inline StarFixture load_star_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open star table fixture: " +
                             path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_star_fixture(buffer.str());
}

// Embedded copy of data/star_table.txt.
inline std::string_view embedded_star_fixture_text() {
  static constexpr std::string_view kText = R"(# Reference fixture for the composition of determined premise diagrams
# (major value x minor value), transcribed from the published 16x16
# operation table.
#
# Format: one line per defined cell,
#
#   <major> <minor> -> <conclusion values, comma separated>
#
# Pairs not listed are undefined (blank cells in the published table).
version 1

0 0 -> 0

1 1 -> 1
1 2 -> 4
1 3 -> 5
2 1 -> 2
2 2 -> 8
2 3 -> 10
3 1 -> 3
3 2 -> 12
3 3 -> 6,7,9,11,13,14,15

4 4 -> 1
4 8 -> 4
4 12 -> 5
8 4 -> 2
8 8 -> 8
8 12 -> 10
12 4 -> 3
12 8 -> 12
12 12 -> 6,7,9,11,13,14,15

5 5 -> 1
5 6 -> 5
5 7 -> 5
5 9 -> 5
5 10 -> 4
5 11 -> 5
5 13 -> 5
5 14 -> 5
5 15 -> 5

6 5 -> 3
6 6 -> 9
6 7 -> 11
6 9 -> 6
6 10 -> 12
6 11 -> 14
6 13 -> 7
6 14 -> 13
6 15 -> 15

7 5 -> 3
7 6 -> 13
7 7 -> 7,9,11,13,15
7 9 -> 7
7 10 -> 12
7 11 -> 6,7,13,14,15
7 13 -> 7
7 14 -> 13
# Erratum: the published table prints 6,7,9,11,13,15 here and in the
# 13 15 cell. That value contradicts the operation's mirror symmetry
# (swapping the operands transposes every member, so this cell must be the
# transpose of the 15 7 value {7,11,15}) as well as the enumeration
# semantics, and it breaks the pattern of every other primed entry. The
# corrected value 7,13,15 is used; see ERRATA.md.
7 15 -> 7,13,15

9 5 -> 3
9 6 -> 6
9 7 -> 7
9 9 -> 9
9 10 -> 12
9 11 -> 13
9 13 -> 11
9 14 -> 14
9 15 -> 15

10 5 -> 2
10 6 -> 10
10 7 -> 10
10 9 -> 10
10 10 -> 8
10 11 -> 10
10 13 -> 10
10 14 -> 10
10 15 -> 10

11 5 -> 3
11 6 -> 14
11 7 -> 6,7,11,14,15
11 9 -> 11
11 10 -> 12
11 11 -> 9,11,13,14,15
11 13 -> 11
11 14 -> 14
11 15 -> 11,14,15

13 5 -> 3
13 6 -> 7
13 7 -> 7
13 9 -> 13
13 10 -> 12
13 11 -> 13
13 13 -> 7,9,11,13,15
13 14 -> 6,7,13,14,15
# Erratum: corrected from the printed 6,7,9,11,13,15 (see the 7 15 note).
13 15 -> 7,13,15

14 5 -> 3
14 6 -> 11
14 7 -> 11
14 9 -> 14
14 10 -> 12
14 11 -> 14
14 13 -> 6,7,11,14,15
14 14 -> 9,11,13,14,15
14 15 -> 11,14,15

15 5 -> 3
15 6 -> 15
15 7 -> 7,11,15
15 9 -> 15
15 10 -> 12
15 11 -> 13,14,15
15 13 -> 7,11,15
15 14 -> 13,14,15
15 15 -> 6,7,9,11,13,14,15
)";
  return kText;
}

inline const StarFixture& embedded_star_fixture() {
  static const StarFixture fx = parse_star_fixture(embedded_star_fixture_text());
  return fx;
}

// One cell where the fixture and the derived operation disagree.
struct StarDiff {
  int major_value;
  int minor_value;
  StarResult expected;  // from the fixture
  StarResult derived;   // from the enumeration-derived operation
};

// Recompute every composition and diff it against the fixture. Empty result
// = full agreement on all 256 cells (definedness and values).
inline std::vector<StarDiff> verify_star_table(const StarFixture& fixture) {
  std::vector<StarDiff> diffs;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const StarResult& want = fixture.at(a, b);
      const StarResult got = star(a, b);
      if (want != got) diffs.push_back({a, b, want, got});
    }
  return diffs;
}

inline std::string to_string(const StarResult& r) {
  return r.has_value() ? r->to_string() : "undefined";
}

}  // namespace slcd
