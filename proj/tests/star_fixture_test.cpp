#include "slcd/star_fixture.hpp"

#include <gtest/gtest.h>

#include <string>

namespace slcd {
namespace {

TEST(StarFixture, EmbeddedCopyParses) {
  const StarFixture& fx = embedded_star_fixture();
  EXPECT_EQ(fx.version, 1);
  EXPECT_EQ(fx.defined_count(), 100);
  // Spot checks across the table's structure.
  EXPECT_EQ(fx.at(0, 0), StarResult(FormSet{0}));
  EXPECT_EQ(fx.at(8, 4), StarResult(FormSet{2}));
  EXPECT_EQ(fx.at(15, 15), StarResult(FormSet{6, 7, 9, 11, 13, 14, 15}));
  EXPECT_EQ(fx.at(1, 4), std::nullopt);
  EXPECT_EQ(fx.at(0, 1), std::nullopt);
}

// The load-bearing check: the operation derived by enumerating region
// assignments reproduces the transcribed reference table cell for cell.
TEST(StarFixture, DerivedOperationMatchesReferenceTable) {
  const std::vector<StarDiff> diffs = verify_star_table(embedded_star_fixture());
  EXPECT_TRUE(diffs.empty());
  for (const StarDiff& d : diffs)
    ADD_FAILURE() << "cell (" << d.major_value << ", " << d.minor_value
                  << "): fixture " << to_string(d.expected) << ", derived "
                  << to_string(d.derived);
}

TEST(StarFixture, DataFileMatchesEmbeddedCopy) {
  const StarFixture from_file =
      load_star_fixture(SLCD_SOURCE_DIR "/data/star_table.txt");
  const StarFixture& embedded = embedded_star_fixture();
  EXPECT_EQ(from_file.version, embedded.version);
  EXPECT_EQ(from_file.expected, embedded.expected);
}

TEST(StarFixture, VerificationReportsACorruptedValue) {
  StarFixture fx = embedded_star_fixture();
  fx.expected[8 * 16 + 4] = FormSet{3};
  const std::vector<StarDiff> diffs = verify_star_table(fx);
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_EQ(diffs[0].major_value, 8);
  EXPECT_EQ(diffs[0].minor_value, 4);
  EXPECT_EQ(diffs[0].expected, StarResult(FormSet{3}));
  EXPECT_EQ(diffs[0].derived, StarResult(FormSet{2}));
}

TEST(StarFixture, VerificationReportsDefinednessMismatches) {
  StarFixture fx = embedded_star_fixture();
  fx.expected[0] = std::nullopt;           // (0,0) wrongly blank
  fx.expected[1 * 16 + 4] = FormSet{1};    // (1,4) wrongly defined
  const std::vector<StarDiff> diffs = verify_star_table(fx);
  ASSERT_EQ(diffs.size(), 2u);
  EXPECT_EQ(diffs[0].expected, std::nullopt);
  EXPECT_EQ(diffs[0].derived, StarResult(FormSet{0}));
  EXPECT_EQ(diffs[1].expected, StarResult(FormSet{1}));
  EXPECT_EQ(diffs[1].derived, std::nullopt);
}

TEST(StarFixtureParser, AcceptsCommentsAndBlankLines) {
  const StarFixture fx = parse_star_fixture(
      "# leading comment\n"
      "\n"
      "version 2  # trailing comment\n"
      "0 0 -> 0\n"
      "3 3 -> 6, 7 , 9,11,13,14,15\n");
  EXPECT_EQ(fx.version, 2);
  EXPECT_EQ(fx.defined_count(), 2);
  EXPECT_EQ(fx.at(3, 3), StarResult(FormSet{6, 7, 9, 11, 13, 14, 15}));
}

TEST(StarFixtureParser, ReportsErrorsWithLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_star_fixture(text);
    } catch (const FixtureError& e) {
      return e.line();
    }
    return 0;  // no error raised
  };
  EXPECT_EQ(line_of("0 0 -> 0\n"), 1u);                        // missing version
  EXPECT_EQ(line_of("version 1\n0 0 0\n"), 2u);                // missing arrow
  EXPECT_EQ(line_of("version 1\n0 -> 0\n"), 2u);               // one value only
  EXPECT_EQ(line_of("version 1\n0 16 -> 0\n"), 2u);            // pair out of range
  EXPECT_EQ(line_of("version 1\n0 0 -> 16\n"), 2u);            // value out of range
  EXPECT_EQ(line_of("version 1\n0 0 -> x\n"), 2u);             // not a number
  EXPECT_EQ(line_of("version 1\n\n0 0 -> \n"), 3u);            // empty list
  EXPECT_EQ(line_of("version 1\n0 0 -> 0\n0 0 -> 1\n"), 3u);   // duplicate pair
  EXPECT_EQ(line_of(""), 1u);                                  // empty input
}

TEST(StarFixtureParser, ErrorMessagesNameTheLine) {
  try {
    parse_star_fixture("version 1\n0 0 -> 99\n");
    FAIL() << "expected FixtureError";
  } catch (const FixtureError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(StarFixtureLoader, MissingFileRaises) {
  EXPECT_THROW(load_star_fixture("/nonexistent/star_table.txt"),
               std::runtime_error);
}

}  // namespace
}  // namespace slcd
