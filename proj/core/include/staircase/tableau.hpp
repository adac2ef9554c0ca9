#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

/// Content of one box. Two-parameter tableaux use Empty, Alpha and Beta;
/// Gamma and Delta appear only in four-symbol tableaux.
enum class Cell : std::uint8_t { Empty, Alpha, Beta, Gamma, Delta };

/// Alpha and Gamma obey the column rule; Beta and Delta obey the row rule.
constexpr bool is_alpha_like(Cell c) { return c == Cell::Alpha || c == Cell::Gamma; }
constexpr bool is_beta_like(Cell c) { return c == Cell::Beta || c == Cell::Delta; }
constexpr bool is_symbol(Cell c) { return c != Cell::Empty; }

char to_char(Cell c);
/// Throws std::invalid_argument for characters outside {A,B,G,D,.}.
Cell cell_from_char(char ch);

/// Box (row, column), both 1-based; row 1 is the top row.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

enum class Diagonal : int { Main = 1, Second = 2, Third = 3 };

/// Boxes of diagonal k in column order: k=1 gives (n-i+1, i), k=2 gives
/// (n-i, i) and k=3 gives (n-i-1, i).
std::vector<Box> diagonal_boxes(int n, Diagonal k);

struct SymbolCounts {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  friend bool operator==(const SymbolCounts&, const SymbolCounts&) = default;
};

/// A filling of the staircase shape (n, n-1, ..., 1). Boxes outside the
/// shape do not exist, so the shape itself cannot be violated; the filling
/// rules are checked by validate().
class Tableau {
 public:
  /// All-empty filling of size n >= 1.
  explicit Tableau(int n);

  int size() const { return n_; }
  bool contains(int row, int col) const {
    return row >= 1 && col >= 1 && row + col <= n_ + 1;
  }
  int row_length(int row) const { return n_ + 1 - row; }

  /// Throws std::out_of_range for boxes outside the shape.
  Cell at(int row, int col) const;
  Cell at(Box b) const { return at(b.row, b.col); }
  void set(int row, int col, Cell c);
  void set(Box b, Cell c) { set(b.row, b.col, c); }

  bool is_alpha_beta() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

  // Unchecked accessors for hot loops.
  Cell cell(int row, int col) const { return cells_[offset(row) + static_cast<std::size_t>(col - 1)]; }
  void put(int row, int col, Cell c) { cells_[offset(row) + static_cast<std::size_t>(col - 1)] = c; }

 private:
  std::size_t offset(int row) const {
    // Rows 1..row-1 hold n + (n-1) + ... + (n-row+2) boxes.
    auto r = static_cast<std::size_t>(row - 1);
    return r * static_cast<std::size_t>(n_) - r * (r - 1) / 2;
  }

  int n_;
  std::vector<Cell> cells_;
};

/// Row-by-row filling as read from text, before the shape is checked.
struct RawFilling {
  int n = 0;
  std::vector<std::vector<Cell>> rows;
};

struct Violation {
  enum class Kind { Shape, Diagonal, Column, Row };
  Kind kind;
  /// Offending box (for Shape: the first box outside the staircase, or the
  /// first missing box).
  Box box;
  /// The symbol that forces the rule (Column and Row only).
  Box cause;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

/// Every rule violation; empty iff the tableau is a staircase tableau.
std::vector<Violation> validate(const Tableau& t);
/// Same as above, but shape errors in a raw filling are reported as
/// Violation::Kind::Shape and checking stops there.
std::vector<Violation> validate(const RawFilling& raw);

/// S[i,j]: delete the first i-1 rows and j-1 columns. Result has size
/// n-i-j+2. Throws std::out_of_range unless (i,j) lies in the shape.
Tableau subtableau(const Tableau& t, int i, int j);

/// (S)_{i,j}: delete row i and column j. Only defined when the remaining
/// boxes form a staircase of size n-1, i.e. j = n+1-i or j = n+2-i;
/// otherwise throws std::invalid_argument.
Tableau delete_row_col(const Tableau& t, int i, int j);

/// Swap rows and columns, Alpha <-> Beta and Gamma <-> Delta.
Tableau transpose(const Tableau& t);

SymbolCounts symbol_counts(const Tableau& t);

/// Text form: the size on the first line, then row i as n+1-i characters
/// from {A,B,G,D,.}. Each line ends with '\n'.
std::string to_text(const Tableau& t);

/// Parses the text form without checking shape. Throws std::invalid_argument
/// on an unreadable size or unknown characters.
RawFilling parse_raw(std::string_view text);

/// Parses and checks the shape (not the filling rules). Throws
/// std::invalid_argument with the shape violation on failure.
Tableau parse_tableau(std::string_view text);

Tableau from_raw(const RawFilling& raw);

}  // namespace staircase
