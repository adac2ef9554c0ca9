#include "staircase/events.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

ConstraintSet::ConstraintSet(std::initializer_list<std::pair<const Box, Requirement>> init) {
  for (const auto& [box, r] : init) require(box, r);
}

ConstraintSet& ConstraintSet::require(Box box, Requirement r) {
  if (r == Requirement::Free) return *this;
  auto [it, inserted] = requirements_.emplace(box, r);
  if (!inserted && it->second != r) {
    throw std::invalid_argument("box (" + std::to_string(box.row) + "," + std::to_string(box.col) +
                                ") already carries a different requirement");
  }
  return *this;
}

Requirement ConstraintSet::at(Box box) const {
  auto it = requirements_.find(box);
  return it == requirements_.end() ? Requirement::Free : it->second;
}

bool ConstraintSet::satisfied_by(const Tableau& t) const {
  return std::all_of(requirements_.begin(), requirements_.end(), [&](const auto& entry) {
    return requirement_allows(entry.second, t.at(entry.first));
  });
}

void ConstraintSet::check_fits(int n) const {
  for (const auto& [box, r] : requirements_) {
    if (box.row < 1 || box.col < 1 || box.row + box.col > n + 1) {
      throw std::out_of_range("constrained box (" + std::to_string(box.row) + "," +
                              std::to_string(box.col) + ") is outside a size-" +
                              std::to_string(n) + " staircase");
    }
  }
}

Statistic parse_statistic(std::string_view name) {
  if (name == "A2") return Statistic::A2;
  if (name == "B2") return Statistic::B2;
  if (name == "X2") return Statistic::X2;
  if (name == "A3") return Statistic::A3;
  if (name == "B3") return Statistic::B3;
  if (name == "X3") return Statistic::X3;
  if (name == "NA") return Statistic::NAlpha;
  if (name == "NB") return Statistic::NBeta;
  throw std::invalid_argument("unknown statistic '" + std::string(name) +
                              "', expected one of A2 B2 X2 A3 B3 X3 NA NB");
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::A2: return "A2";
    case Statistic::B2: return "B2";
    case Statistic::X2: return "X2";
    case Statistic::A3: return "A3";
    case Statistic::B3: return "B3";
    case Statistic::X3: return "X3";
    case Statistic::NAlpha: return "NA";
    case Statistic::NBeta: return "NB";
  }
  return "?";
}

std::vector<Box> statistic_boxes(int n, Statistic s) {
  switch (s) {
    case Statistic::A2:
    case Statistic::B2:
    case Statistic::X2: return diagonal_boxes(n, Diagonal::Second);
    case Statistic::A3:
    case Statistic::B3:
    case Statistic::X3: return diagonal_boxes(n, Diagonal::Third);
    case Statistic::NAlpha:
    case Statistic::NBeta: break;
  }
  std::vector<Box> all;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n + 1 - j; ++i) all.push_back({i, j});
  }
  return all;
}

bool statistic_counts(Statistic s, Cell c) {
  switch (s) {
    case Statistic::A2:
    case Statistic::A3:
    case Statistic::NAlpha: return c == Cell::Alpha;
    case Statistic::B2:
    case Statistic::B3:
    case Statistic::NBeta: return c == Cell::Beta;
    case Statistic::X2:
    case Statistic::X3: return c != Cell::Empty;
  }
  return false;
}

int statistic_value(const Tableau& t, Statistic s) {
  int value = 0;
  for (Box b : statistic_boxes(t.size(), s)) value += statistic_counts(s, t.at(b)) ? 1 : 0;
  return value;
}

int statistic_support_bound(int n, Statistic s) {
  switch (s) {
    case Statistic::A2:
    case Statistic::B2:
    case Statistic::X2: return n / 2;  // no two adjacent boxes: ceil((n-1)/2)
    case Statistic::A3:
    case Statistic::B3:
    case Statistic::X3: {
      // Boxes in columns j and j+2 are never both filled.
      int m = std::max(n - 2, 0);
      return 2 * (m / 4) + std::min(m % 4, 2);
    }
    case Statistic::NAlpha:
    case Statistic::NBeta: return n;
  }
  return n;
}

}  // namespace staircase
