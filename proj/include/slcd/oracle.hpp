#pragma once
// Independent validity checks used to cross-examine the diagram engine:
//
//  * a brute-force semantic oracle that sweeps every occupancy model of the
//    eight S/M/P regions and tests whether the premises can hold while the
//    conclusion fails, sharing no machinery with the diagram calculus; and
//
//  * the traditional rule filter (distribution and quality/quantity rules),
//    which soundly rejects moods but does not by itself certify validity.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slcd/bilateral.hpp"
#include "slcd/engine.hpp"

namespace slcd {

// One semantic model: which of the eight regions cut out by S, M, P hold at
// least one individual. Region (s, m, p) lives at bit 4*s + 2*m + p. The
// all-empty model (an empty universe) is admitted.
struct RegionModel {
  std::uint8_t regions = 0;

  constexpr bool occupied(bool in_s, bool in_m, bool in_p) const {
    return (regions >> (4 * int(in_s) + 2 * int(in_m) + int(in_p)) & 1) != 0;
  }

  friend constexpr bool operator==(RegionModel, RegionModel) = default;
};

namespace detail {

inline bool region_in_term(const std::string& term, bool in_s, bool in_m,
                           bool in_p) {
  if (term == "S") return in_s;
  if (term == "M") return in_m;
  if (term == "P") return in_p;
  throw std::invalid_argument("unknown term \"" + term +
                              "\" (the oracle handles S, M, P)");
}

inline void require_known_term(const std::string& term) {
  if (term != "S" && term != "M" && term != "P")
    throw std::invalid_argument("unknown term \"" + term +
                                "\" (the oracle handles S, M, P)");
}

}  // namespace detail

// Truth of one categorical statement in one model, by direct appeal to the
// usual semantics (universal statements are vacuously true when the subject
// is empty; particular ones assert occupancy):
//
//   A: no region inside subject but outside predicate is occupied
//   E: no region inside both subject and predicate is occupied
//   I: some region inside both subject and predicate is occupied
//   O: some region inside subject but outside predicate is occupied
inline bool eval_statement(const Proposition& prop, RegionModel model) {
  // Validate up front: the region loop skips unoccupied regions and may
  // never consult the term names at all.
  detail::require_known_term(prop.subject);
  detail::require_known_term(prop.predicate);
  // The region each kind speaks about: subject ∩ predicate for E and I,
  // subject ∩ predicate' for A and O.
  const bool target_in_predicate =
      prop.quantifier == Quantifier::E || prop.quantifier == Quantifier::I;
  bool witness = false;
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < 2; ++m)
      for (int p = 0; p < 2; ++p) {
        if (!model.occupied(s, m, p)) continue;
        if (!detail::region_in_term(prop.subject, s, m, p)) continue;
        if (detail::region_in_term(prop.predicate, s, m, p) ==
            target_in_predicate)
          witness = true;
      }
  // An occupied target region satisfies a particular statement and refutes
  // a universal one.
  return is_particular(prop.quantifier) == witness;
}

inline bool term_nonempty(RegionModel model, Term term) {
  const std::string name = term_name(term);
  for (int s = 0; s < 2; ++s)
    for (int m = 0; m < 2; ++m)
      for (int p = 0; p < 2; ++p)
        if (model.occupied(s, m, p) && detail::region_in_term(name, s, m, p))
          return true;
  return false;
}

inline bool satisfies_condition(RegionModel model, Condition condition) {
  switch (condition) {
    case Condition::unconditional: return true;
    case Condition::s_exists: return term_nonempty(model, Term::S);
    case Condition::m_exists: return term_nonempty(model, Term::M);
    case Condition::p_exists: return term_nonempty(model, Term::P);
  }
  throw std::out_of_range("invalid condition");
}

// Semantic validity by exhaustion: over all 256 occupancy models, no model
// satisfies both premises and the existence assumption yet falsifies the
// conclusion.
inline bool semantically_valid(const Mood& mood, Condition condition) {
  const Proposition major = premise_proposition(mood, PremiseRole::major);
  const Proposition minor = premise_proposition(mood, PremiseRole::minor);
  const Proposition conclusion{mood.conclusion, "S", "P"};
  for (int bits = 0; bits < 256; ++bits) {
    const RegionModel model{static_cast<std::uint8_t>(bits)};
    if (!eval_statement(major, model)) continue;
    if (!eval_statement(minor, model)) continue;
    if (!satisfies_condition(model, condition)) continue;
    if (!eval_statement(conclusion, model)) return false;
  }
  return true;
}

// The traditional filter rules.
enum class Rule : std::uint8_t {
  two_particular_premises,        // 1a
  two_negative_premises,          // 1b
  particular_conclusion_needed,   // 2a: particular premise, universal conclusion
  negative_conclusion_needed,     // 2b: negative premise, affirmative conclusion
  undistributed_middle,           // 3a
  illicit_major,                  // 3b: P distributed in conclusion only
  illicit_minor,                  // 3c: S distributed in conclusion only
};

inline constexpr std::array<Rule, 7> kRules{
    Rule::two_particular_premises, Rule::two_negative_premises,
    Rule::particular_conclusion_needed, Rule::negative_conclusion_needed,
    Rule::undistributed_middle, Rule::illicit_major, Rule::illicit_minor};

inline std::string_view rule_label(Rule r) {
  switch (r) {
    case Rule::two_particular_premises: return "1a";
    case Rule::two_negative_premises: return "1b";
    case Rule::particular_conclusion_needed: return "2a";
    case Rule::negative_conclusion_needed: return "2b";
    case Rule::undistributed_middle: return "3a";
    case Rule::illicit_major: return "3b";
    case Rule::illicit_minor: return "3c";
  }
  throw std::out_of_range("invalid rule");
}

inline std::string_view rule_description(Rule r) {
  switch (r) {
    case Rule::two_particular_premises:
      return "both premises are particular";
    case Rule::two_negative_premises:
      return "both premises are negative";
    case Rule::particular_conclusion_needed:
      return "a particular premise requires a particular conclusion";
    case Rule::negative_conclusion_needed:
      return "a negative premise requires a negative conclusion";
    case Rule::undistributed_middle:
      return "the middle term is distributed in neither premise";
    case Rule::illicit_major:
      return "the conclusion distributes the predicate term but its premise "
             "does not";
    case Rule::illicit_minor:
      return "the conclusion distributes the subject term but its premise "
             "does not";
  }
  throw std::out_of_range("invalid rule");
}

// Distribution: a statement distributes a term when it speaks about every
// member of it. A distributes its subject, E both terms, I neither, O its
// predicate.
constexpr bool distributes(Quantifier q, bool subject_position) {
  if (subject_position) return q == Quantifier::A || q == Quantifier::E;
  return q == Quantifier::E || q == Quantifier::O;
}

struct RuleReport {
  std::vector<Rule> violations;

  bool clean() const { return violations.empty(); }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(violations.size());
    for (Rule r : violations) out.emplace_back(rule_label(r));
    return out;
  }
};

// Check a mood against the traditional rules. Violating any rule already
// makes the mood invalid; a clean report proves nothing by itself.
inline RuleReport classical_rules_check(const Mood& mood) {
  const FigureLayout layout = figure_layout(mood.figure);
  const bool m_in_major_subject = layout.major_subject == Term::M;
  const bool m_in_minor_subject = layout.minor_subject == Term::M;

  const bool middle_distributed =
      distributes(mood.major, m_in_major_subject) ||
      distributes(mood.minor, m_in_minor_subject);
  // P occurs in the major premise, S in the minor; each is the subject there
  // exactly when M is not.
  const bool p_distributed_in_major =
      distributes(mood.major, !m_in_major_subject);
  const bool s_distributed_in_minor =
      distributes(mood.minor, !m_in_minor_subject);
  const bool p_distributed_in_conclusion =
      distributes(mood.conclusion, /*subject_position=*/false);
  const bool s_distributed_in_conclusion =
      distributes(mood.conclusion, /*subject_position=*/true);

  RuleReport report;
  const auto flag = [&report](bool violated, Rule rule) {
    if (violated) report.violations.push_back(rule);
  };
  flag(is_particular(mood.major) && is_particular(mood.minor),
       Rule::two_particular_premises);
  flag(is_negative(mood.major) && is_negative(mood.minor),
       Rule::two_negative_premises);
  flag((is_particular(mood.major) || is_particular(mood.minor)) &&
           is_universal(mood.conclusion),
       Rule::particular_conclusion_needed);
  flag((is_negative(mood.major) || is_negative(mood.minor)) &&
           is_affirmative(mood.conclusion),
       Rule::negative_conclusion_needed);
  flag(!middle_distributed, Rule::undistributed_middle);
  flag(p_distributed_in_conclusion && !p_distributed_in_major,
       Rule::illicit_major);
  flag(s_distributed_in_conclusion && !s_distributed_in_minor,
       Rule::illicit_minor);
  return report;
}

}  // namespace slcd
