#pragma once
// Plain-text rendering of bilateral diagrams.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "slcd/bilateral.hpp"

namespace slcd {

// Rendered content of one diagram cell.
enum class CellMark : std::uint8_t {
  blank,     // cell not determined by the statement
  empty,     // rendered "0"
  occupied,  // rendered "1"
};

// A bilateral diagram prepared for rendering: its axis labels and the four
// cell marks in n1, n2, n3, n4 order.
struct DiagramView {
  std::string row_term;
  std::string col_term;
  std::array<CellMark, 4> cells{};

  // A fully determined diagram: every cell marked 0 or 1.
  static DiagramView of_form(BilateralForm form, const Orientation& orient) {
    DiagramView view{orient.row_term, orient.col_term, {}};
    for (int bit = 0; bit < 4; ++bit)
      view.cells[static_cast<std::size_t>(3 - bit)] =
          (form.value() >> bit & 1) != 0 ? CellMark::occupied
                                         : CellMark::empty;
    return view;
  }

  // The one cell a statement determines, the rest left blank. The
  // orientation must mention the statement's two terms.
  static DiagramView of_constraint(const Proposition& prop,
                                   const Orientation& orient) {
    // Validates terms and fixes which axis carries the subject.
    proposition_form_set(prop, orient);
    const bool subject_on_rows = prop.subject == orient.row_term;
    const int bit = constrained_cell_bit(prop.quantifier, subject_on_rows);
    DiagramView view{orient.row_term, orient.col_term, {}};
    view.cells[static_cast<std::size_t>(3 - bit)] =
        constrained_cell_occupied(prop.quantifier) ? CellMark::occupied
                                                   : CellMark::empty;
    return view;
  }
};

// Draw the 2x2 grid with its axis labels, e.g. for "All M are P" over
// rows M, columns P:
//
//   +----+----+----+
//   |    | P' | P  |
//   +----+----+----+
//   | M' |    |    |
//   +----+----+----+
//   | M  | 0  |    |
//   +----+----+----+
inline std::string render_bilateral(const DiagramView& view) {
  const auto mark_text = [](CellMark m) -> std::string {
    switch (m) {
      case CellMark::blank: return "";
      case CellMark::empty: return "0";
      case CellMark::occupied: return "1";
    }
    return "";
  };

  const std::array<std::array<std::string, 3>, 3> grid{{
      {"", view.col_term + "'", view.col_term},
      {view.row_term + "'", mark_text(view.cells[0]), mark_text(view.cells[1])},
      {view.row_term, mark_text(view.cells[2]), mark_text(view.cells[3])},
  }};

  std::array<std::size_t, 3> widths{1, 1, 1};
  for (const auto& row : grid)
    for (std::size_t col = 0; col < 3; ++col)
      widths[col] = std::max(widths[col], row[col].size());

  std::string border = "+";
  for (std::size_t col = 0; col < 3; ++col)
    border += std::string(widths[col] + 2, '-') + "+";
  border += '\n';

  std::string out = border;
  for (const auto& row : grid) {
    out += '|';
    for (std::size_t col = 0; col < 3; ++col) {
      out += ' ' + row[col] + std::string(widths[col] - row[col].size(), ' ') +
             " |";
    }
    out += '\n';
    out += border;
  }
  return out;
}

}  // namespace slcd
