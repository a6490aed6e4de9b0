#pragma once
// Decision engine for categorical syllogisms.
//
// A syllogism is decided by pure diagram bookkeeping: draw each premise as
// its set of determined bilateral diagrams, fold an existence assumption
// into the premise it concerns (if any), compose the two sets through the
// trilateral diagram, and test whether every resulting conclusion diagram
// satisfies the conclusion statement.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "slcd/bilateral.hpp"
#include "slcd/trilateral.hpp"

namespace slcd {

// The three syllogistic terms: subject and predicate of the conclusion,
// and the middle term shared by the premises.
enum class Term : char { S = 'S', M = 'M', P = 'P' };

inline std::string term_name(Term t) {
  return std::string(1, static_cast<char>(t));
}

enum class Figure : std::uint8_t { first = 1, second = 2, third = 3, fourth = 4 };

inline constexpr std::array<Figure, 4> kFigures{
    Figure::first, Figure::second, Figure::third, Figure::fourth};

constexpr Figure figure_from_int(int n) {
  if (n < 1 || n > 4) throw std::out_of_range("figure outside 1..4");
  return static_cast<Figure>(n);
}

constexpr int figure_number(Figure f) { return static_cast<int>(f); }

// Subject/predicate placement of the terms in each premise:
//
//   figure 1: M-P, S-M    figure 2: P-M, S-M
//   figure 3: M-P, M-S    figure 4: P-M, M-S
struct FigureLayout {
  Term major_subject;
  Term major_predicate;
  Term minor_subject;
  Term minor_predicate;
};

constexpr FigureLayout figure_layout(Figure f) {
  switch (f) {
    case Figure::first:
      return {Term::M, Term::P, Term::S, Term::M};
    case Figure::second:
      return {Term::P, Term::M, Term::S, Term::M};
    case Figure::third:
      return {Term::M, Term::P, Term::M, Term::S};
    case Figure::fourth:
      return {Term::P, Term::M, Term::M, Term::S};
  }
  throw std::out_of_range("figure outside 1..4");
}

// A syllogistic form: quantifiers of major premise, minor premise and
// conclusion, plus the figure. "AAA-1" is all-universal-affirmative in the
// first figure.
struct Mood {
  Quantifier major;
  Quantifier minor;
  Quantifier conclusion;
  Figure figure;

  std::string to_string() const {
    std::string out;
    out += quantifier_letter(major);
    out += quantifier_letter(minor);
    out += quantifier_letter(conclusion);
    out += '-';
    out += static_cast<char>('0' + figure_number(figure));
    return out;
  }

  friend constexpr bool operator==(const Mood&, const Mood&) = default;
};

// All 256 moods, in AAA-1, AAA-2, ..., OOO-4 order.
inline std::vector<Mood> all_moods() {
  std::vector<Mood> out;
  out.reserve(256);
  for (Quantifier major : kQuantifiers)
    for (Quantifier minor : kQuantifiers)
      for (Quantifier conclusion : kQuantifiers)
        for (Figure figure : kFigures)
          out.push_back({major, minor, conclusion, figure});
  return out;
}

// Existence assumption under which a syllogism is decided.
enum class Condition : std::uint8_t { unconditional, s_exists, m_exists, p_exists };

inline constexpr std::array<Condition, 4> kConditions{
    Condition::unconditional, Condition::s_exists, Condition::m_exists,
    Condition::p_exists};

inline std::string to_string(Condition c) {
  switch (c) {
    case Condition::unconditional: return "unconditional";
    case Condition::s_exists: return "s_exists";
    case Condition::m_exists: return "m_exists";
    case Condition::p_exists: return "p_exists";
  }
  throw std::out_of_range("invalid condition");
}

enum class PremiseRole : std::uint8_t { major, minor };

// The fixed diagram sets the engine decides against.
struct EngineConfig {
  // Diagrams of "Some X are X", drawn over (X, X).
  FormSet const_set = existence_constant_set();
  // Conclusion diagram sets (rows S, columns P), indexed by
  // quantifier_index.
  std::array<FormSet, 4> conclusion_sets{};

  static constexpr EngineConfig standard() {
    EngineConfig config;
    for (Quantifier q : kQuantifiers)
      config.conclusion_sets[quantifier_index(q)] =
          quantifier_form_set(q, /*subject_on_rows=*/true);
    return config;
  }

  constexpr const FormSet& conclusion_set(Quantifier q) const {
    return conclusion_sets[quantifier_index(q)];
  }
};

// The premise proposition a mood assigns to one role.
inline Proposition premise_proposition(const Mood& mood, PremiseRole role) {
  const FigureLayout layout = figure_layout(mood.figure);
  if (role == PremiseRole::major)
    return {mood.major, term_name(layout.major_subject),
            term_name(layout.major_predicate)};
  return {mood.minor, term_name(layout.minor_subject),
          term_name(layout.minor_predicate)};
}

// Diagram set of one premise under the given existence assumption.
//
// Premises are drawn with M on the rows: the major over (M, P), the minor
// over (M, S). An existence assumption strengthens the premise naming that
// term to "premise and the term is non-empty"; diagrammatically the premise
// set is composed with the existence constant, transposing as needed so the
// shared term of the pair sits on the rows:
//
//   S exists: minor := const ∗ transpose(minor)   (shared term S)
//   M exists: minor := minor ∗ const              (shared term M)
//   P exists: major := const ∗ transpose(major)   (shared term P)
//
// Conditions touching the other premise leave this one unchanged.
inline FormSet interpret_premise(Quantifier q, PremiseRole role, Figure figure,
                                 Condition condition,
                                 const EngineConfig& config) {
  const FigureLayout layout = figure_layout(figure);
  const Term subject =
      role == PremiseRole::major ? layout.major_subject : layout.minor_subject;
  const FormSet base = quantifier_form_set(q, subject == Term::M);

  if (role == PremiseRole::minor && condition == Condition::s_exists)
    return compose(config.const_set, transpose_set(base));
  if (role == PremiseRole::minor && condition == Condition::m_exists)
    return compose(base, config.const_set);
  if (role == PremiseRole::major && condition == Condition::p_exists)
    return compose(config.const_set, transpose_set(base));
  return base;
}

// Every determined conclusion diagram (rows S, columns P) some world
// satisfying both premises — and the existence assumption — presents.
inline FormSet premises_conclusion(const Mood& mood, Condition condition,
                                   const EngineConfig& config) {
  const FormSet major = interpret_premise(mood.major, PremiseRole::major,
                                          mood.figure, condition, config);
  const FormSet minor = interpret_premise(mood.minor, PremiseRole::minor,
                                          mood.figure, condition, config);
  return compose(major, minor);
}

// Decision for one mood under one condition. `entailed` records every
// conclusion kind whose diagram set contains the propagated set — i.e.
// every conclusion the premises support, not just the one the mood claims.
struct Verdict {
  bool valid = false;
  Condition condition = Condition::unconditional;
  FormSet conclusion_set;       // the propagated set
  std::uint8_t entailed = 0;    // bit per quantifier_index

  constexpr bool entails(Quantifier q) const {
    return (entailed >> quantifier_index(q) & 1) != 0;
  }
};

// A mood is valid when the propagated set lies inside the conclusion's
// diagram set: every world the premises allow satisfies the conclusion.
// Containment, not equality — under an existence assumption the premises
// can pin down strictly more than a weaker (but still entailed) conclusion
// states.
inline Verdict decide(const Mood& mood, Condition condition,
                      const EngineConfig& config = EngineConfig::standard()) {
  Verdict verdict;
  verdict.condition = condition;
  verdict.conclusion_set = premises_conclusion(mood, condition, config);
  for (Quantifier q : kQuantifiers)
    if (verdict.conclusion_set.subset_of(config.conclusion_set(q)))
      verdict.entailed |= static_cast<std::uint8_t>(1u << quantifier_index(q));
  verdict.valid = verdict.entails(mood.conclusion);
  return verdict;
}

struct EnumeratedMood {
  Mood mood;
  Verdict verdict;
};

// All moods valid under `condition`, in all_moods order. With
// `only_conditional`, restricted to moods not already valid without any
// existence assumption.
inline std::vector<EnumeratedMood> enumerate_valid(
    Condition condition, const EngineConfig& config = EngineConfig::standard(),
    bool only_conditional = false) {
  std::vector<EnumeratedMood> out;
  for (const Mood& mood : all_moods()) {
    Verdict verdict = decide(mood, condition, config);
    if (!verdict.valid) continue;
    if (only_conditional &&
        decide(mood, Condition::unconditional, config).valid)
      continue;
    out.push_back({mood, verdict});
  }
  return out;
}

}  // namespace slcd
