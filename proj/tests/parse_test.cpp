#include "slcd/parse.hpp"

#include <gtest/gtest.h>

#include <string>

namespace slcd {
namespace {

std::size_t mood_error_position(const std::string& text) {
  try {
    parse_mood(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for \"" << text << "\"";
  return std::string::npos;
}

std::size_t statement_error_position(const std::string& text) {
  try {
    parse_statement(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for \"" << text << "\"";
  return std::string::npos;
}

TEST(ParseMood, AcceptsCanonicalNotation) {
  const Mood m = parse_mood("AAA-1");
  EXPECT_EQ(m.major, Quantifier::A);
  EXPECT_EQ(m.minor, Quantifier::A);
  EXPECT_EQ(m.conclusion, Quantifier::A);
  EXPECT_EQ(m.figure, Figure::first);
  EXPECT_EQ(parse_mood("EIO-4").to_string(), "EIO-4");
}

TEST(ParseMood, LettersAreCaseInsensitive) {
  EXPECT_EQ(parse_mood("eio-3").to_string(), "EIO-3");
  EXPECT_EQ(parse_mood("aEo-2").to_string(), "AEO-2");
}

TEST(ParseMood, RejectsMalformedNotation) {
  EXPECT_EQ(mood_error_position(""), 0u);
  EXPECT_EQ(mood_error_position("AAA"), 0u);       // too short
  EXPECT_EQ(mood_error_position("AAAA-1"), 0u);    // too long
  EXPECT_EQ(mood_error_position("ABA-1"), 1u);     // bad letter
  EXPECT_EQ(mood_error_position("AAA_1"), 3u);     // bad separator
  EXPECT_EQ(mood_error_position("AAA-5"), 4u);     // bad figure
  EXPECT_EQ(mood_error_position("AAA-0"), 4u);
}

TEST(ParseMood, RoundTripsAllMoods) {
  for (const Mood& m : all_moods())
    EXPECT_EQ(parse_mood(m.to_string()), m);
}

TEST(ParseStatement, AcceptsTheFourForms) {
  EXPECT_EQ(parse_statement("All M are P"),
            (Proposition{Quantifier::A, "M", "P"}));
  EXPECT_EQ(parse_statement("No cats are dogs"),
            (Proposition{Quantifier::E, "cats", "dogs"}));
  EXPECT_EQ(parse_statement("Some S are M"),
            (Proposition{Quantifier::I, "S", "M"}));
  EXPECT_EQ(parse_statement("Some S are not P"),
            (Proposition{Quantifier::O, "S", "P"}));
}

TEST(ParseStatement, KeywordsAreCaseInsensitiveTermsAreNot) {
  EXPECT_EQ(parse_statement("ALL x ARE y"),
            (Proposition{Quantifier::A, "x", "y"}));
  EXPECT_EQ(parse_statement("some x are NOT y"),
            (Proposition{Quantifier::O, "x", "y"}));
  // "X" and "x" are different terms.
  EXPECT_EQ(parse_statement("All X are x"),
            (Proposition{Quantifier::A, "X", "x"}));
}

TEST(ParseStatement, ToleratesExtraWhitespace) {
  EXPECT_EQ(parse_statement("  Some \t geese  are   swans "),
            (Proposition{Quantifier::I, "geese", "swans"}));
}

TEST(ParseStatement, AcceptsPrimedAndCompoundTerms) {
  EXPECT_EQ(parse_statement("All x' are long_term2"),
            (Proposition{Quantifier::A, "x'", "long_term2"}));
}

TEST(ParseStatement, RejectsMalformedStatements) {
  EXPECT_EQ(statement_error_position(""), 0u);
  EXPECT_EQ(statement_error_position("   "), 0u);
  EXPECT_EQ(statement_error_position("Banana S are P"), 0u);
  EXPECT_EQ(statement_error_position("All S is P"), 6u);        // "is"
  EXPECT_EQ(statement_error_position("All S are"), 9u);         // incomplete
  EXPECT_EQ(statement_error_position("All S are P extra"), 12u);
  EXPECT_EQ(statement_error_position("All S are not P"), 10u);  // "not" term
  EXPECT_EQ(statement_error_position("Some S are not"), 14u);   // incomplete
  EXPECT_EQ(statement_error_position("All S are S"), 10u);      // repeated term
  EXPECT_EQ(statement_error_position("All are are P"), 4u);     // keyword term
  EXPECT_EQ(statement_error_position("All S/2 are P"), 4u);     // bad character
}

TEST(ParseStatement, ErrorMessagesIncludeThePosition) {
  try {
    parse_statement("All S is P");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos);
  }
}

TEST(ToText, RendersEachFormAndRoundTrips) {
  const Proposition props[] = {
      {Quantifier::A, "S", "P"},
      {Quantifier::E, "men", "islands"},
      {Quantifier::I, "S", "M"},
      {Quantifier::O, "swans", "white_things"},
  };
  EXPECT_EQ(to_text(props[0]), "All S are P");
  EXPECT_EQ(to_text(props[1]), "No men are islands");
  EXPECT_EQ(to_text(props[2]), "Some S are M");
  EXPECT_EQ(to_text(props[3]), "Some swans are not white_things");
  for (const Proposition& p : props) EXPECT_EQ(parse_statement(to_text(p)), p);
}

TEST(InferFigure, RecognizesAllFourFigures) {
  const Proposition concl{Quantifier::A, "S", "P"};
  EXPECT_EQ(infer_figure({Quantifier::A, "M", "P"}, {Quantifier::A, "S", "M"},
                         concl),
            Figure::first);
  EXPECT_EQ(infer_figure({Quantifier::A, "P", "M"}, {Quantifier::A, "S", "M"},
                         concl),
            Figure::second);
  EXPECT_EQ(infer_figure({Quantifier::A, "M", "P"}, {Quantifier::A, "M", "S"},
                         concl),
            Figure::third);
  EXPECT_EQ(infer_figure({Quantifier::A, "P", "M"}, {Quantifier::A, "M", "S"},
                         concl),
            Figure::fourth);
}

TEST(InferFigure, WorksWithArbitraryTermNames) {
  // "No reptiles are mammals; all whales are mammals; so no whales are
  // reptiles" — figure 2 over (reptiles, mammals, whales).
  const Figure fig = infer_figure(
      parse_statement("No reptiles are mammals"),
      parse_statement("All whales are mammals"),
      parse_statement("No whales are reptiles"));
  EXPECT_EQ(fig, Figure::second);
}

TEST(InferFigure, RejectsBrokenStructure) {
  const Proposition concl{Quantifier::A, "S", "P"};
  // First premise lacks the conclusion's predicate.
  EXPECT_THROW(infer_figure({Quantifier::A, "S", "M"},
                            {Quantifier::A, "M", "P"}, concl),
               std::invalid_argument);
  // Second premise lacks the conclusion's subject.
  EXPECT_THROW(infer_figure({Quantifier::A, "M", "P"},
                            {Quantifier::A, "M", "P"}, concl),
               std::invalid_argument);
  // No shared middle term.
  EXPECT_THROW(infer_figure({Quantifier::A, "X", "P"},
                            {Quantifier::A, "S", "Y"}, concl),
               std::invalid_argument);
}

TEST(MoodFromStatements, AssemblesTheMood) {
  const Mood m = mood_from_statements(parse_statement("No M are P"),
                                      parse_statement("Some S are M"),
                                      parse_statement("Some S are not P"));
  EXPECT_EQ(m.to_string(), "EIO-1");
}

TEST(MoodFromStatements, CoversEveryMoodViaGeneratedStatements) {
  for (const Mood& m : all_moods()) {
    const Proposition major = premise_proposition(m, PremiseRole::major);
    const Proposition minor = premise_proposition(m, PremiseRole::minor);
    const Proposition concl{m.conclusion, "S", "P"};
    const Mood back = mood_from_statements(
        parse_statement(to_text(major)), parse_statement(to_text(minor)),
        parse_statement(to_text(concl)));
    EXPECT_EQ(back, m) << m.to_string();
  }
}

}  // namespace
}  // namespace slcd
