#pragma once
// Parsers for the two input notations:
//
//   mood notation    "AAA-1"  (three letters from AEIO and a figure 1-4)
//   statement form   "All X are Y" | "No X are Y" | "Some X are [not] Y"
//
// and structural assembly of a syllogism from three statements.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slcd/bilateral.hpp"
#include "slcd/engine.hpp"

namespace slcd {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Token {
  std::string_view text;
  std::size_t position;
};

inline std::vector<Token> split_words(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

inline bool is_keyword(std::string_view word) {
  const std::string w = lowercase(word);
  return w == "all" || w == "no" || w == "some" || w == "are" || w == "not";
}

// Terms are single words of letters, digits, underscores and primes, not
// colliding with a grammar keyword.
inline std::string parse_term(const Token& token) {
  if (is_keyword(token.text))
    throw ParseError("expected a term, got the keyword \"" +
                         std::string(token.text) + "\"",
                     token.position);
  for (char c : token.text) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                    c == '_' || c == '\'';
    if (!ok)
      throw ParseError("invalid character '" + std::string(1, c) +
                           "' in term \"" + std::string(token.text) + "\"",
                       token.position);
  }
  return std::string(token.text);
}

}  // namespace detail

// Parse "AAA-1"-style mood notation. Letters are accepted in either case.
inline Mood parse_mood(std::string_view text) {
  if (text.size() != 5)
    throw ParseError(
        "mood notation must be three letters, a dash and a figure, like "
        "\"AAA-1\"",
        0);
  Quantifier parts[3];
  for (std::size_t i = 0; i < 3; ++i) {
    const char upper = static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[i])));
    if (upper != 'A' && upper != 'E' && upper != 'I' && upper != 'O')
      throw ParseError("expected a quantifier letter (A, E, I or O)", i);
    parts[i] = static_cast<Quantifier>(upper);
  }
  if (text[3] != '-') throw ParseError("expected '-' before the figure", 3);
  if (text[4] < '1' || text[4] > '4')
    throw ParseError("figure must be 1, 2, 3 or 4", 4);
  return {parts[0], parts[1], parts[2], figure_from_int(text[4] - '0')};
}

// Parse one categorical statement. Keywords are case-insensitive; terms are
// case-sensitive and must be distinct.
inline Proposition parse_statement(std::string_view text) {
  const std::vector<detail::Token> words = detail::split_words(text);
  if (words.empty()) throw ParseError("empty statement", 0);

  const std::string head = detail::lowercase(words[0].text);
  Quantifier quantifier;
  std::size_t expected_words;
  if (head == "all") {
    quantifier = Quantifier::A;
    expected_words = 4;
  } else if (head == "no") {
    quantifier = Quantifier::E;
    expected_words = 4;
  } else if (head == "some") {
    // "Some X are Y" or "Some X are not Y"
    const bool negated =
        words.size() >= 4 && detail::lowercase(words[3].text) == "not";
    quantifier = negated ? Quantifier::O : Quantifier::I;
    expected_words = negated ? 5 : 4;
  } else {
    throw ParseError("statement must start with All, No or Some",
                     words[0].position);
  }

  if (words.size() < expected_words)
    throw ParseError("incomplete statement", text.size());
  if (detail::lowercase(words[2].text) != "are")
    throw ParseError("expected \"are\"", words[2].position);

  const detail::Token& predicate_word = words[expected_words - 1];
  Proposition prop{quantifier, detail::parse_term(words[1]),
                   detail::parse_term(predicate_word)};
  if (words.size() > expected_words)
    throw ParseError("unexpected word \"" +
                         std::string(words[expected_words].text) + "\"",
                     words[expected_words].position);
  if (prop.subject == prop.predicate)
    throw ParseError("statement terms must be distinct",
                     predicate_word.position);
  return prop;
}

// Render a proposition back to statement form.
inline std::string to_text(const Proposition& prop) {
  switch (prop.quantifier) {
    case Quantifier::A: return "All " + prop.subject + " are " + prop.predicate;
    case Quantifier::E: return "No " + prop.subject + " are " + prop.predicate;
    case Quantifier::I:
      return "Some " + prop.subject + " are " + prop.predicate;
    case Quantifier::O:
      return "Some " + prop.subject + " are not " + prop.predicate;
  }
  throw std::invalid_argument("invalid quantifier");
}

// Determine the figure of a premise pair against a conclusion: the first
// premise must be the major (containing the conclusion's predicate), the
// second the minor (containing its subject), and both must share a middle
// term distinct from the conclusion's terms.
inline Figure infer_figure(const Proposition& major, const Proposition& minor,
                           const Proposition& conclusion) {
  const std::string& s = conclusion.subject;
  const std::string& p = conclusion.predicate;

  const auto other_term = [](const Proposition& prop,
                             const std::string& known) -> const std::string& {
    return prop.subject == known ? prop.predicate : prop.subject;
  };

  if (major.subject != p && major.predicate != p)
    throw std::invalid_argument(
        "the first premise must contain the conclusion's predicate \"" + p +
        "\"");
  if (minor.subject != s && minor.predicate != s)
    throw std::invalid_argument(
        "the second premise must contain the conclusion's subject \"" + s +
        "\"");

  const std::string& middle_major = other_term(major, p);
  const std::string& middle_minor = other_term(minor, s);
  if (middle_major != middle_minor)
    throw std::invalid_argument("the premises do not share a middle term (\"" +
                                middle_major + "\" vs \"" + middle_minor +
                                "\")");
  if (middle_major == s || middle_major == p)
    throw std::invalid_argument(
        "the middle term must differ from the conclusion's terms");

  const bool major_middle_subject = major.subject == middle_major;
  const bool minor_middle_subject = minor.subject == middle_minor;
  if (major_middle_subject)
    return minor_middle_subject ? Figure::third : Figure::first;
  return minor_middle_subject ? Figure::fourth : Figure::second;
}

// Assemble a mood from three parsed statements (major, minor, conclusion).
inline Mood mood_from_statements(const Proposition& major,
                                 const Proposition& minor,
                                 const Proposition& conclusion) {
  return {major.quantifier, minor.quantifier, conclusion.quantifier,
          infer_figure(major, minor, conclusion)};
}

}  // namespace slcd
