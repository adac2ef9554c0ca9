#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "staircase/events.hpp"
#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Largest size accepted by the counting engine.
inline constexpr int kMaxDpSize = 22;

/// Work counters reported by the column sweep.
struct DpStats {
  /// Nonzero (mask) states surviving each column boundary, summed over
  /// columns. Bounded by 2^(n+1).
  std::uint64_t boundary_states = 0;
  /// Number of in-place (row bit clear, row bit set) pair updates.
  std::uint64_t pair_updates = 0;
};

/// Sum over valid alpha/beta tableaux satisfying c of a^(n-N_alpha)
/// b^(n-N_beta). Without constraints this is the rising factorial
/// (a+b)(a+b+1)...(a+b+n-1). Contradictory constraints give 0.
/// Throws std::out_of_range for n outside 1..kMaxDpSize or boxes outside
/// the staircase.
Rational constrained_partition(int n, const Weights& w, const ConstraintSet& c,
                               DpStats* stats = nullptr);

/// Same sum scaled by d^(2n), where a = pa/d and b = pb/d; exact integer.
BigInt scaled_constrained_partition(int n, const ScaledWeights& w, const ConstraintSet& c,
                                    DpStats* stats = nullptr);

/// Floating-point variant of constrained_partition, for timing studies only.
double constrained_partition_approx(int n, double a, double b, const ConstraintSet& c);

/// Exact probability of the event c under P_{n,alpha,beta}.
Rational event_prob(int n, const Weights& w, const ConstraintSet& c);

/// Exact law of a statistic, from a sweep whose values are polynomials in a
/// marker variable (degree capped by statistic_support_bound).
Pmf statistic_pmf_dp(int n, const Weights& w, Statistic s, DpStats* stats = nullptr);

/// Boxes in sweep order: columns left to right, top to bottom within a
/// column.
std::vector<Box> sweep_order(int n);

/// Law of the next box in sweep order given the contents of a prefix.
struct CellLaw {
  Rational empty;
  Rational alpha;
  Rational beta;

  const Rational& of(Cell c) const;
};

/// Backward tables of the column sweep. Supports exact conditional laws of
/// each box given any consistent prefix, which drives the chain-rule
/// sampler. Safe to share between threads.
class ChainRuleModel {
 public:
  ChainRuleModel(int n, const Weights& w);

  int size() const { return n_; }
  const Weights& weights() const { return w_; }

  /// Scaled integer weights of the three choices for the next box, given a
  /// prefix in sweep order. Throws std::invalid_argument if the prefix has
  /// zero continuation mass or is complete.
  struct Choice {
    BigInt empty;
    BigInt alpha;
    BigInt beta;
  };
  Choice next_choice(const std::vector<Cell>& prefix) const;

  CellLaw conditional_cell_law(const std::vector<Cell>& prefix) const;

  /// Product of conditional laws along the sweep; equals P(S) for valid S
  /// and 0 otherwise.
  Rational path_probability(const Tableau& t) const;

  /// Draws a tableau by walking the sweep and choosing each box from its
  /// exact conditional law. uniform_below(m) must return a uniform integer
  /// in [0, m).
  Tableau draw(const std::function<BigInt(const BigInt&)>& uniform_below) const;

  /// Scaled total mass d^(2n) (a+b)^(rising n).
  const BigInt& total() const { return total_; }

 private:
  struct Cursor {
    int col = 1;
    int row = 1;
    std::uint32_t mask = 0;
    bool above = false;
  };
  /// Applies one cell to a cursor; returns false if the placement is illegal.
  bool advance(Cursor& cur, Cell c) const;
  /// Scaled weight of completing the sweep from a cursor.
  BigInt continuation(const Cursor& cur) const;
  BigInt continuation_uncached(const Cursor& cur) const;
  Choice choice_at(const Cursor& cur) const;

  int n_;
  Weights w_;
  ScaledWeights sw_;
  BigInt coef_alpha_clean_;  // d * pb
  BigInt coef_beta_top_;     // d * pa
  /// boundary_[j][mask] = weight of completing columns j..n when column j
  /// starts with the given dirty mask (j = 1..n+1).
  std::vector<std::vector<BigInt>> boundary_;
  BigInt total_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace staircase
