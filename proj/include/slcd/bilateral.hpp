#pragma once
// Bilateral diagrams: the universe split by two terms into four cells.
//
// A diagram is drawn with one term on the columns and one on the rows; the
// primed half of each term comes first, so the cells are laid out as
//
//              X'    X
//        Y'    n1    n2
//        Y     n3    n4
//
// A fully determined diagram marks every cell 0 (empty) or 1 (occupied) and
// is encoded as the value 8*n1 + 4*n2 + 2*n3 + n4, a bijection with 0..15.
// Categorical statements determine only one cell; the remaining cells range
// freely, so each statement corresponds to a set of determined diagrams.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace slcd {

// The four categorical statement kinds, named by their scholastic letters.
enum class Quantifier : char {
  A = 'A',  // universal affirmative:  All S are P
  E = 'E',  // universal negative:     No S are P
  I = 'I',  // particular affirmative: Some S are P
  O = 'O',  // particular negative:    Some S are not P
};

inline constexpr std::array<Quantifier, 4> kQuantifiers{
    Quantifier::A, Quantifier::E, Quantifier::I, Quantifier::O};

constexpr int quantifier_index(Quantifier q) {
  switch (q) {
    case Quantifier::A: return 0;
    case Quantifier::E: return 1;
    case Quantifier::I: return 2;
    case Quantifier::O: return 3;
  }
  throw std::invalid_argument("invalid quantifier");
}

constexpr char quantifier_letter(Quantifier q) { return static_cast<char>(q); }

constexpr bool is_universal(Quantifier q) {
  return q == Quantifier::A || q == Quantifier::E;
}
constexpr bool is_particular(Quantifier q) { return !is_universal(q); }
constexpr bool is_negative(Quantifier q) {
  return q == Quantifier::E || q == Quantifier::O;
}
constexpr bool is_affirmative(Quantifier q) { return !is_negative(q); }

// Value encoding of a determined diagram from its four cell marks.
constexpr int form_value(bool n1, bool n2, bool n3, bool n4) {
  return 8 * int(n1) + 4 * int(n2) + 2 * int(n3) + int(n4);
}

// One fully determined bilateral diagram.
class BilateralForm {
 public:
  constexpr BilateralForm() = default;
  constexpr explicit BilateralForm(int value)
      : value_(static_cast<std::uint8_t>(value)) {
    if (value < 0 || value > 15)
      throw std::out_of_range("bilateral form value outside 0..15");
  }

  static constexpr BilateralForm from_cells(bool n1, bool n2, bool n3,
                                            bool n4) {
    return BilateralForm(form_value(n1, n2, n3, n4));
  }

  constexpr int value() const { return value_; }
  constexpr bool n1() const { return (value_ & 8) != 0; }
  constexpr bool n2() const { return (value_ & 4) != 0; }
  constexpr bool n3() const { return (value_ & 2) != 0; }
  constexpr bool n4() const { return (value_ & 1) != 0; }

  // Bit position of the cell in row half `in_row` and column half `in_col`
  // (true = the unprimed half): n1 is (false,false), n4 is (true,true).
  static constexpr int cell_bit(bool in_row, bool in_col) {
    return 3 - (2 * int(in_row) + int(in_col));
  }

  constexpr bool cell(bool in_row, bool in_col) const {
    return (value_ >> cell_bit(in_row, in_col) & 1) != 0;
  }

  friend constexpr bool operator==(BilateralForm, BilateralForm) = default;

 private:
  std::uint8_t value_ = 0;
};

// Mirror a diagram across its main diagonal, exchanging the row and column
// roles: n2 and n3 trade places, n1 and n4 stay put. An involution.
constexpr int transpose_form(int value) {
  BilateralForm f(value);  // validates the range
  return form_value(f.n1(), f.n3(), f.n2(), f.n4());
}

// A subset of the sixteen determined diagrams, stored as a bit mask
// (bit v set = form value v is a member).
class FormSet {
 public:
  constexpr FormSet() = default;
  constexpr FormSet(std::initializer_list<int> values) {
    for (int v : values) insert(v);
  }

  static constexpr FormSet from_mask(std::uint16_t mask) {
    FormSet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr FormSet all() { return from_mask(0xffff); }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(int value) const {
    return (mask_ >> checked(value) & 1) != 0;
  }
  constexpr void insert(int value) {
    mask_ |= static_cast<std::uint16_t>(1u << checked(value));
  }
  constexpr bool subset_of(FormSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr FormSet& operator|=(FormSet other) {
    mask_ |= other.mask_;
    return *this;
  }
  friend constexpr FormSet operator|(FormSet a, FormSet b) { return a |= b; }
  friend constexpr bool operator==(FormSet, FormSet) = default;

  // Members in ascending order.
  std::vector<int> values() const {
    std::vector<int> out;
    for (int v = 0; v < 16; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  // "{0,1,4,5}"; the empty set renders as "{}".
  std::string to_string() const {
    std::string out = "{";
    for (int v = 0; v < 16; ++v) {
      if (!contains(v)) continue;
      if (out.size() > 1) out += ',';
      out += std::to_string(v);
    }
    out += '}';
    return out;
  }

 private:
  static constexpr int checked(int value) {
    if (value < 0 || value > 15)
      throw std::out_of_range("bilateral form value outside 0..15");
    return value;
  }

  std::uint16_t mask_ = 0;
};

constexpr FormSet transpose_set(FormSet s) {
  FormSet out;
  for (int v = 0; v < 16; ++v)
    if (s.contains(v)) out.insert(transpose_form(v));
  return out;
}

// A categorical statement relating two distinct terms.
struct Proposition {
  Quantifier quantifier;
  std::string subject;
  std::string predicate;

  friend bool operator==(const Proposition&, const Proposition&) = default;
};

// Which term labels the rows and which the columns of a diagram.
struct Orientation {
  std::string row_term;
  std::string col_term;
};

// Each statement kind forces exactly one cell of the diagram:
//
//   A: subject ∩ predicate' is empty      E: subject ∩ predicate is empty
//   I: subject ∩ predicate  is occupied   O: subject ∩ predicate' is occupied
//
// E and I constrain the row ∩ column cell (n4) whichever term is the
// subject; A and O constrain n3 when the subject labels the rows and n2
// when it labels the columns.
constexpr int constrained_cell_bit(Quantifier q, bool subject_on_rows) {
  switch (q) {
    case Quantifier::A:
    case Quantifier::O:
      return subject_on_rows ? 1 : 2;
    case Quantifier::E:
    case Quantifier::I:
      return 0;
  }
  throw std::invalid_argument("invalid quantifier");
}

// Mark the constrained cell must carry: occupied for the particular
// statements, empty for the universal ones.
constexpr bool constrained_cell_occupied(Quantifier q) {
  return is_particular(q);
}

// All determined diagrams compatible with a statement of kind `q` whose
// subject is on the rows (or columns). Always has exactly eight members:
// one cell is pinned, the other three range freely.
constexpr FormSet quantifier_form_set(Quantifier q, bool subject_on_rows) {
  const int bit = constrained_cell_bit(q, subject_on_rows);
  const bool occupied = constrained_cell_occupied(q);
  FormSet out;
  for (int v = 0; v < 16; ++v)
    if (((v >> bit & 1) != 0) == occupied) out.insert(v);
  return out;
}

// Diagram set of `prop` drawn with the given row/column terms. The
// orientation must mention exactly the statement's two terms.
inline FormSet proposition_form_set(const Proposition& prop,
                                    const Orientation& orient) {
  if (prop.subject == prop.predicate)
    throw std::invalid_argument("statement terms must be distinct: got \"" +
                                prop.subject + "\" twice");
  bool subject_on_rows;
  if (prop.subject == orient.row_term && prop.predicate == orient.col_term) {
    subject_on_rows = true;
  } else if (prop.subject == orient.col_term &&
             prop.predicate == orient.row_term) {
    subject_on_rows = false;
  } else {
    throw std::invalid_argument("orientation (" + orient.row_term + ", " +
                                orient.col_term +
                                ") does not match statement terms (" +
                                prop.subject + ", " + prop.predicate + ")");
  }
  return quantifier_form_set(prop.quantifier, subject_on_rows);
}

// Diagram set of the existence statement "Some X are X" drawn over (X, X).
// On that degenerate diagram the off-diagonal cells denote X ∩ X' and are
// necessarily empty, while the statement occupies the X ∩ X cell; only n1
// ranges freely, leaving {1, 9}.
constexpr FormSet existence_constant_set() {
  FormSet out;
  for (int v = 0; v < 16; ++v) {
    const bool n2 = (v >> 2 & 1) != 0;
    const bool n3 = (v >> 1 & 1) != 0;
    const bool n4 = (v & 1) != 0;
    if (!n2 && !n3 && n4) out.insert(v);
  }
  return out;
}

}  // namespace slcd
