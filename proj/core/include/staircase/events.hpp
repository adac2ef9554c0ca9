#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/tableau.hpp"

namespace staircase {

enum class Requirement { Free, MustAlpha, MustBeta, MustNonEmpty, MustEmpty };

constexpr bool requirement_allows(Requirement r, Cell c) {
  switch (r) {
    case Requirement::Free: return true;
    case Requirement::MustAlpha: return c == Cell::Alpha;
    case Requirement::MustBeta: return c == Cell::Beta;
    case Requirement::MustNonEmpty: return c != Cell::Empty;
    case Requirement::MustEmpty: return c == Cell::Empty;
  }
  return false;
}

/// Per-box requirements describing an event such as "alpha in box (n-1,1)
/// and box (2,3) empty". At most one requirement per box.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(std::initializer_list<std::pair<const Box, Requirement>> init);

  /// Throws std::invalid_argument if the box already carries a different
  /// requirement.
  ConstraintSet& require(Box box, Requirement r);

  Requirement at(Box box) const;
  bool allows(Box box, Cell c) const { return requirement_allows(at(box), c); }
  bool satisfied_by(const Tableau& t) const;
  bool empty() const { return requirements_.empty(); }
  std::size_t size() const { return requirements_.size(); }

  /// Throws std::out_of_range if a constrained box lies outside size n.
  void check_fits(int n) const;

  const std::map<Box, Requirement>& entries() const { return requirements_; }

 private:
  std::map<Box, Requirement> requirements_;
};

/// Diagonal statistics of a random tableau.
enum class Statistic { A2, B2, X2, A3, B3, X3, NAlpha, NBeta };

/// Accepts A2, B2, X2, A3, B3, X3, NA, NB (case-sensitive). Throws
/// std::invalid_argument otherwise.
Statistic parse_statistic(std::string_view name);
std::string to_string(Statistic s);

/// Boxes whose content contributes to the statistic.
std::vector<Box> statistic_boxes(int n, Statistic s);
/// Whether a box holding c adds one to the statistic.
bool statistic_counts(Statistic s, Cell c);
/// Value of the statistic on one tableau.
int statistic_value(const Tableau& t, Statistic s);
/// Upper bound on the statistic that holds for every tableau of size n.
int statistic_support_bound(int n, Statistic s);

}  // namespace staircase
