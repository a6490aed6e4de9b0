#pragma once
// Trilateral diagrams: the universe split by three terms S, M, P into eight
// regions, and the premise-composition operation built on them.
//
// Composition answers: given one determined diagram for the major premise
// (drawn over M and P) and one for the minor premise (drawn over M and S),
// which determined conclusion diagrams (over S and P) can a single world
// satisfying both present? It is evaluated by enumerating all 256 occupancy
// assignments of the eight regions, keeping those consistent with both
// premise diagrams, and projecting each survivor onto the conclusion pair
// of terms.

#include <array>
#include <cstdint>
#include <optional>

#include "slcd/bilateral.hpp"

namespace slcd {

// One occupancy assignment for the eight regions. Region (s, m, p) — each
// sign true inside the term, false outside — lives at bit 4*s + 2*m + p.
struct TrilateralAssignment {
  std::uint8_t regions = 0;

  constexpr bool occupied(bool in_s, bool in_m, bool in_p) const {
    return (regions >> (4 * int(in_s) + 2 * int(in_m) + int(in_p)) & 1) != 0;
  }

  friend constexpr bool operator==(TrilateralAssignment,
                                   TrilateralAssignment) = default;
};

// Premise diagrams both carry the middle term on the rows:
//
//   major: rows M, columns P        minor: rows M, columns S
//
// Each premise cell covers two regions (the cell split by the absent third
// term). An assignment is consistent with a determined premise diagram when
// every 0 cell has both covered regions empty and every 1 cell has at least
// one covered region occupied — that is, when the assignment's projection
// onto the premise's pair of terms reproduces the diagram exactly.
constexpr bool consistent(BilateralForm major, BilateralForm minor,
                          TrilateralAssignment asg) {
  for (int m = 0; m < 2; ++m)
    for (int p = 0; p < 2; ++p) {
      const bool occ = asg.occupied(false, m, p) || asg.occupied(true, m, p);
      if (major.cell(m, p) != occ) return false;
    }
  for (int m = 0; m < 2; ++m)
    for (int s = 0; s < 2; ++s) {
      const bool occ = asg.occupied(s, m, false) || asg.occupied(s, m, true);
      if (minor.cell(m, s) != occ) return false;
    }
  return true;
}

// Project an assignment onto the conclusion diagram (rows S, columns P):
// a conclusion cell is occupied when either of its two regions is.
constexpr BilateralForm project(TrilateralAssignment asg) {
  int value = 0;
  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < 2; ++p) {
      const bool occ = asg.occupied(s, false, p) || asg.occupied(s, true, p);
      if (occ) value |= 1 << BilateralForm::cell_bit(s, p);
    }
  return BilateralForm(value);
}

// Result of composing two determined premise diagrams. Disengaged when no
// region assignment satisfies both premises (their middle-term rows carry
// contradictory occupancy); otherwise the non-empty set of conclusion
// diagrams the consistent assignments project to.
using StarResult = std::optional<FormSet>;

namespace detail {

constexpr std::uint16_t star_mask(int major_value, int minor_value) {
  const BilateralForm a(major_value);
  const BilateralForm b(minor_value);
  std::uint16_t out = 0;
  for (int bits = 0; bits < 256; ++bits) {
    const TrilateralAssignment asg{static_cast<std::uint8_t>(bits)};
    if (consistent(a, b, asg))
      out |= static_cast<std::uint16_t>(1u << project(asg).value());
  }
  return out;
}

// All 256 pairwise compositions, derived once at compile time; index
// major*16 + minor. A zero mask encodes an undefined composition — a
// defined one can never be empty, since every consistent assignment
// projects somewhere.
constexpr std::array<std::uint16_t, 256> make_star_table() {
  std::array<std::uint16_t, 256> table{};
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) table[a * 16 + b] = star_mask(a, b);
  return table;
}

inline constexpr std::array<std::uint16_t, 256> kStarTable = make_star_table();

}  // namespace detail

// Compose one determined major-premise diagram with one determined
// minor-premise diagram.
constexpr StarResult star(int major_value, int minor_value) {
  static_cast<void>(BilateralForm{major_value});  // validate the range
  static_cast<void>(BilateralForm{minor_value});
  const std::uint16_t mask = detail::kStarTable[major_value * 16 + minor_value];
  if (mask == 0) return std::nullopt;
  return FormSet::from_mask(mask);
}

// Lift composition to whole premise sets: the union of the defined pairwise
// compositions. Pairs with no common world contribute nothing; the result
// is empty only if every pair is contradictory, which no pair of
// categorical premises produces.
constexpr FormSet compose(FormSet major, FormSet minor) {
  FormSet out;
  for (int a = 0; a < 16; ++a) {
    if (!major.contains(a)) continue;
    for (int b = 0; b < 16; ++b) {
      if (!minor.contains(b)) continue;
      if (const StarResult r = star(a, b)) out |= *r;
    }
  }
  return out;
}

}  // namespace slcd
