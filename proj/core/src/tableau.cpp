#include "staircase/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

char to_char(Cell c) {
  switch (c) {
    case Cell::Empty: return '.';
    case Cell::Alpha: return 'A';
    case Cell::Beta: return 'B';
    case Cell::Gamma: return 'G';
    case Cell::Delta: return 'D';
  }
  return '?';
}

Cell cell_from_char(char ch) {
  switch (ch) {
    case '.': return Cell::Empty;
    case 'A': return Cell::Alpha;
    case 'B': return Cell::Beta;
    case 'G': return Cell::Gamma;
    case 'D': return Cell::Delta;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown cell character '") + ch +
                              "', expected one of A B G D .");
}

std::vector<Box> diagonal_boxes(int n, Diagonal k) {
  int shift = static_cast<int>(k) - 1;
  std::vector<Box> boxes;
  for (int i = 1; i <= n - shift; ++i) boxes.push_back({n - shift - i + 1, i});
  return boxes;
}

Tableau::Tableau(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("tableau size must be positive");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2, Cell::Empty);
}

Cell Tableau::at(int row, int col) const {
  if (!contains(row, col)) {
    throw std::out_of_range("box (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is outside a size-" + std::to_string(n_) + " staircase");
  }
  return cell(row, col);
}

void Tableau::set(int row, int col, Cell c) {
  if (!contains(row, col)) {
    throw std::out_of_range("box (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is outside a size-" + std::to_string(n_) + " staircase");
  }
  put(row, col, c);
}

bool Tableau::is_alpha_beta() const {
  for (Cell c : cells_) {
    if (c == Cell::Gamma || c == Cell::Delta) return false;
  }
  return true;
}

std::string describe(const Violation& v) {
  auto box = [](Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; };
  switch (v.kind) {
    case Violation::Kind::Shape: return "shape: box " + box(v.box) + " breaks the staircase shape";
    case Violation::Kind::Diagonal: return "diagonal: box " + box(v.box) + " is empty";
    case Violation::Kind::Column:
      return "column: box " + box(v.box) + " is above the alpha/gamma at " + box(v.cause);
    case Violation::Kind::Row:
      return "row: box " + box(v.box) + " is left of the beta/delta at " + box(v.cause);
  }
  return "unknown violation";
}

std::vector<Violation> validate(const Tableau& t) {
  std::vector<Violation> out;
  const int n = t.size();
  for (int i = 1; i <= n; ++i) {
    if (!is_symbol(t.cell(i, n + 1 - i))) {
      out.push_back({Violation::Kind::Diagonal, {i, n + 1 - i}, {i, n + 1 - i}});
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n + 1 - j; ++i) {
      Cell c = t.cell(i, j);
      if (is_alpha_like(c)) {
        for (int above = 1; above < i; ++above) {
          if (is_symbol(t.cell(above, j))) out.push_back({Violation::Kind::Column, {above, j}, {i, j}});
        }
      }
      if (is_beta_like(c)) {
        for (int left = 1; left < j; ++left) {
          if (is_symbol(t.cell(i, left))) out.push_back({Violation::Kind::Row, {i, left}, {i, j}});
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<Violation> shape_violations(const RawFilling& raw) {
  if (raw.n < 1) return {{Violation::Kind::Shape, {1, 1}, {1, 1}}};
  if (static_cast<int>(raw.rows.size()) != raw.n) {
    int first_bad = std::min(static_cast<int>(raw.rows.size()), raw.n) + 1;
    return {{Violation::Kind::Shape, {first_bad, 1}, {first_bad, 1}}};
  }
  for (int i = 1; i <= raw.n; ++i) {
    int len = static_cast<int>(raw.rows[static_cast<std::size_t>(i - 1)].size());
    int expected = raw.n + 1 - i;
    if (len != expected) {
      int col = std::min(len, expected) + 1;
      return {{Violation::Kind::Shape, {i, col}, {i, col}}};
    }
  }
  return {};
}

}  // namespace

std::vector<Violation> validate(const RawFilling& raw) {
  auto shape = shape_violations(raw);
  if (!shape.empty()) return shape;
  return validate(from_raw(raw));
}

Tableau from_raw(const RawFilling& raw) {
  auto shape = shape_violations(raw);
  if (!shape.empty()) throw std::invalid_argument(describe(shape.front()));
  Tableau t(raw.n);
  for (int i = 1; i <= raw.n; ++i) {
    const auto& row = raw.rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= raw.n + 1 - i; ++j) t.put(i, j, row[static_cast<std::size_t>(j - 1)]);
  }
  return t;
}

Tableau subtableau(const Tableau& t, int i, int j) {
  if (!t.contains(i, j)) {
    throw std::out_of_range("subtableau corner (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside the staircase");
  }
  const int m = t.size() - i - j + 2;
  Tableau s(m);
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= m + 1 - r; ++c) s.put(r, c, t.cell(r + i - 1, c + j - 1));
  }
  return s;
}

Tableau delete_row_col(const Tableau& t, int i, int j) {
  const int n = t.size();
  if (n < 2 || i < 1 || i > n || j < 1 || j > n || (j != n + 1 - i && j != n + 2 - i)) {
    throw std::invalid_argument("deleting row " + std::to_string(i) + " and column " +
                                std::to_string(j) + " of a size-" + std::to_string(n) +
                                " staircase does not leave a staircase of size " +
                                std::to_string(n - 1));
  }
  Tableau s(n - 1);
  for (int r = 1, nr = 1; r <= n; ++r) {
    if (r == i) continue;
    for (int c = 1, nc = 1; c <= n + 1 - r; ++c) {
      if (c == j) continue;
      s.put(nr, nc, t.cell(r, c));
      ++nc;
    }
    ++nr;
  }
  return s;
}

Tableau transpose(const Tableau& t) {
  auto swap_symbol = [](Cell c) {
    switch (c) {
      case Cell::Alpha: return Cell::Beta;
      case Cell::Beta: return Cell::Alpha;
      case Cell::Gamma: return Cell::Delta;
      case Cell::Delta: return Cell::Gamma;
      case Cell::Empty: break;
    }
    return Cell::Empty;
  };
  const int n = t.size();
  Tableau s(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) s.put(j, i, swap_symbol(t.cell(i, j)));
  }
  return s;
}

SymbolCounts symbol_counts(const Tableau& t) {
  SymbolCounts counts;
  const int n = t.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) {
      switch (t.cell(i, j)) {
        case Cell::Alpha: ++counts.alpha; break;
        case Cell::Beta: ++counts.beta; break;
        case Cell::Gamma: ++counts.gamma; break;
        case Cell::Delta: ++counts.delta; break;
        case Cell::Empty: break;
      }
    }
  }
  return counts;
}

std::string to_text(const Tableau& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (int i = 1; i <= t.size(); ++i) {
    for (int j = 1; j <= t.size() + 1 - i; ++j) out.push_back(to_char(t.cell(i, j)));
    out.push_back('\n');
  }
  return out;
}

RawFilling parse_raw(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw std::invalid_argument("empty tableau text");
  RawFilling raw;
  std::string size_line(lines.front());
  try {
    std::size_t used = 0;
    raw.n = std::stoi(size_line, &used);
    if (used != size_line.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("tableau text must start with the size, got '" + size_line + "'");
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::vector<Cell> row;
    for (char ch : lines[k]) row.push_back(cell_from_char(ch));
    raw.rows.push_back(std::move(row));
  }
  return raw;
}

Tableau parse_tableau(std::string_view text) { return from_raw(parse_raw(text)); }

}  // namespace staircase
