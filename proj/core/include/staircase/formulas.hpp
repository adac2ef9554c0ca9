#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/events.hpp"
#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

enum class FactorialKind { Rising, Falling };

/// x(x+1)...(x+k-1) and x(x-1)...(x-k+1); k = 0 gives 1. Throws
/// std::invalid_argument for negative k.
Rational rising(const Rational& x, int k);
Rational falling(const Rational& x, int k);
Rational rising_falling(const Rational& x, int k, FactorialKind kind);

/// prod_{i=0}^{n-1} (alpha + beta + gamma + delta + i (alpha+gamma)(beta+delta)).
Rational partition_closed(int n, const FourWeights& w);
/// alpha^n beta^n (a+b)^(rising n) for finite positive alpha, beta.
Rational partition_closed(int n, const Rational& alpha, const Rational& beta);
/// (a+b)^(rising n): the sum of a^(n-N_alpha) b^(n-N_beta) over tableaux.
Rational normalized_partition_closed(int n, const Weights& w);

struct BoxLaw {
  Rational alpha;
  Rational beta;
  Rational empty;
};

/// Law of the content of one box. On the main diagonal
/// P(alpha) = (n-i+b)/(n+a+b-1) and P(beta) = (a+i-1)/(n+a+b-1); elsewhere
/// P(alpha) = (j-1+b)/(i+j+a+b-1)_2 and P(beta) = (i-1+a)/(i+j+a+b-1)_2 with
/// the falling factorial. Throws std::out_of_range outside the shape.
BoxLaw box_law(int n, const Weights& w, Box box);

/// Required spacing between consecutive indices.
enum class GapClass { Free = 1, Gap2 = 2, Gap3 = 3 };

/// Strictly increasing column indices j_1 < ... < j_r (all >= 1).
class IndexTuple {
 public:
  IndexTuple() = default;
  /// Throws std::invalid_argument unless strictly increasing and positive.
  explicit IndexTuple(std::vector<int> cols);
  /// As above, and additionally requires the given gap class.
  IndexTuple(std::vector<int> cols, GapClass required);

  int r() const { return static_cast<int>(cols_.size()); }
  const std::vector<int>& cols() const { return cols_; }
  /// 1-based access: j(1) is the smallest index.
  int j(int k) const { return cols_.at(static_cast<std::size_t>(k - 1)); }
  /// Smallest difference between consecutive indices (a large value when
  /// r < 2).
  int min_gap() const;
  bool satisfies(GapClass g) const { return min_gap() >= static_cast<int>(g); }
  /// Strongest class satisfied.
  GapClass gap_class() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> cols_;
};

/// Parses "j1,j2,...". Throws std::invalid_argument.
IndexTuple parse_index_tuple(std::string_view text);
std::string to_string(const IndexTuple& t);

/// Which event is asked of each box in a diagonal tuple.
enum class EventKind { Alpha, Beta, NonEmpty };

/// Box of diagonal k in column j: (n - k - j + 2, j).
Box diagonal_box(int n, Diagonal k, int j);

/// The event {box of diagonal k in column j_l has the given kind, all l}.
ConstraintSet diagonal_event(int n, Diagonal k, const IndexTuple& t, EventKind kind);

enum class ZeroReason {
  None,
  /// Consecutive indices are closer than the formula's gap condition, so
  /// the probability is 0 (second diagonal) or only of lower order (third
  /// diagonal main term).
  GapViolation,
};

std::string to_string(ZeroReason reason);

/// A formula value with a machine-readable reason when it is a structural
/// zero. order_only marks third-diagonal tuples outside the gap class, for
/// which only an order bound is known and the returned value is 0.
struct FormulaValue {
  Rational value;
  ZeroReason reason = ZeroReason::None;
  bool order_only = false;
};

/// P(alpha in each box (n-j_l, j_l)) = prod_{k=1}^{r}
/// (b + j_{r-k+1} - 2r + 2k - 1) / (n+a+b-2r+2k-1)_2 when the gaps are at
/// least 2, else 0. Throws std::out_of_range unless 1 <= j_1, j_r <= n-1.
FormulaValue second_diag_joint_alpha(int n, const Weights& w, const IndexTuple& t);

/// P(beta in each box (n-j_l, j_l)): the transpose maps that box to
/// (j_l, n-j_l), so this is the alpha formula with a and b exchanged at the
/// mirrored columns n - j_l.
FormulaValue second_diag_joint_beta(int n, const Weights& w, const IndexTuple& t);

/// P(each box (n-j_l, j_l) non-empty) = prod_{k=1}^{r} 1/(n+a+b-r+k-1) when
/// the gaps are at least 2, else 0.
FormulaValue second_diag_joint_nonempty(int n, const Weights& w, const IndexTuple& t);

/// Leading term of the joint third-diagonal probability for boxes
/// (n-j_l-1, j_l): the same products as above when the gaps are at least 3;
/// otherwise 0 with order_only set. Throws unless 1 <= j_1, j_r <= n-2 and
/// kind is Alpha or NonEmpty.
FormulaValue third_diag_main_term(int n, const Weights& w, const IndexTuple& t, EventKind kind);

/// Number of r-tuples in 1..m whose consecutive gaps are at least `gap`:
/// binomial(m - (gap-1)(r-1), r).
BigInt gap_tuple_count(int r, int m, int gap = 2);

/// Visits every such tuple in lexicographic order.
void for_each_gap_tuple(int r, int m, int gap, const std::function<void(const std::vector<int>&)>& visit);

/// All gap-2 tuples of length r in 1..m.
std::vector<IndexTuple> gap_index_sets(int r, int m);

struct LemmaSides {
  Rational lhs;
  Rational rhs;
};

/// lhs: sum over gap-2 r-tuples in 1..m of j_1 j_2 ... j_r, summed directly.
/// rhs: (m+1)_{2r} / (2^r r!). Throws std::invalid_argument for r < 1.
LemmaSides lemma_la_sum(int r, int m);

}  // namespace staircase
