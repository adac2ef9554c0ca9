#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "staircase/events.hpp"
#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Largest size the exhaustive oracle accepts ((9+1)! = 3,628,800 tableaux).
inline constexpr int kMaxEnumSize = 9;
/// Four-symbol tableaux grow as 4^n n!; this caps them at about 2.9 million.
inline constexpr int kMaxFourSymbolEnumSize = 6;

enum class Alphabet { AlphaBeta, FourSymbol };

namespace detail {

template <class Visit>
class Backtracker {
 public:
  Backtracker(int n, Alphabet alphabet, Visit& visit)
      : n_(n), alphabet_(alphabet), visit_(visit), t_(n) {}

  void run() { place(1, 1, 0U, false); }

 private:
  // Column-major sweep. dirty has bit i-1 set when row i already holds a
  // symbol to the left; has_above is true when the current column holds a
  // symbol above the current row.
  void place(int row, int col, std::uint32_t dirty, bool has_above) {
    if (col > n_) {
      visit_(static_cast<const Tableau&>(t_));
      return;
    }
    const int height = n_ + 1 - col;
    const bool diagonal = row == height;
    const auto next = [&](std::uint32_t d, bool above) {
      if (diagonal) {
        place(1, col + 1, d, false);
      } else {
        place(row + 1, col, d, above);
      }
    };
    const std::uint32_t bit = 1U << (row - 1);
    const bool clean = (dirty & bit) == 0;

    if (!diagonal) {
      t_.put(row, col, Cell::Empty);
      next(dirty, has_above);
    }
    if (!has_above) {
      t_.put(row, col, Cell::Alpha);
      next(dirty | bit, true);
      if (alphabet_ == Alphabet::FourSymbol) {
        t_.put(row, col, Cell::Gamma);
        next(dirty | bit, true);
      }
    }
    if (clean) {
      t_.put(row, col, Cell::Beta);
      next(dirty | bit, true);
      if (alphabet_ == Alphabet::FourSymbol) {
        t_.put(row, col, Cell::Delta);
        next(dirty | bit, true);
      }
    }
    t_.put(row, col, Cell::Empty);
  }

  int n_;
  Alphabet alphabet_;
  Visit& visit_;
  Tableau t_;
};

}  // namespace detail

inline void check_enum_size(int n, Alphabet alphabet) {
  const int cap = alphabet == Alphabet::AlphaBeta ? kMaxEnumSize : kMaxFourSymbolEnumSize;
  if (n < 1 || n > cap) {
    throw std::out_of_range("enumeration supports sizes 1.." + std::to_string(cap) + ", got " +
                            std::to_string(n));
  }
}

/// Streams every staircase tableau of size n exactly once. The reference
/// passed to visit is only valid during the call.
template <class Visit>
void for_each_tableau(int n, Visit&& visit, Alphabet alphabet = Alphabet::AlphaBeta) {
  check_enum_size(n, alphabet);
  detail::Backtracker<std::remove_reference_t<Visit>> bt(n, alphabet, visit);
  bt.run();
}

std::uint64_t count_tableaux(int n, Alphabet alphabet = Alphabet::AlphaBeta);

/// Number of alpha/beta tableaux of size n with each (N_alpha, N_beta),
/// indexed [N_alpha][N_beta]; optionally restricted by a predicate.
using WeightClassCounts = std::vector<std::vector<std::uint64_t>>;
WeightClassCounts weight_class_counts(int n,
                                      const std::function<bool(const Tableau&)>& keep = nullptr);

/// Sum over classes of count * a^(n-N_alpha) * b^(n-N_beta).
Rational normalized_weight(int n, const Weights& w, const WeightClassCounts& counts);

/// a^(n-N_alpha) b^(n-N_beta) for one alpha/beta tableau (0^0 = 1).
Rational normalized_weight(const Tableau& t, const Weights& w);

/// Sum of alpha^N_alpha beta^N_beta over all alpha/beta tableaux.
Rational brute_partition(int n, const Rational& alpha, const Rational& beta);
/// Sum of the four-symbol weights over all staircase tableaux of size n,
/// enumerated directly with the four-symbol rules (class counts are cached
/// per size, so repeated calls cost one enumeration).
Rational brute_partition(int n, const FourWeights& w);
/// Sum of the normalized weights a^(n-N_alpha) b^(n-N_beta).
Rational brute_normalized_partition(int n, const Weights& w);

/// P_{n,alpha,beta} restricted to small n by exhaustive enumeration.
/// The normalizer is itself computed by enumeration.
class OracleMeasure {
 public:
  OracleMeasure(int n, const Weights& w);

  int size() const { return n_; }
  const Weights& weights() const { return w_; }
  const Rational& normalizer() const { return total_; }

  Rational prob(const Tableau& t) const;
  Rational prob(const ConstraintSet& c) const;
  Rational prob(const std::function<bool(const Tableau&)>& event) const;
  /// P(event and condition) / P(condition).
  Rational conditional(const std::function<bool(const Tableau&)>& event,
                       const std::function<bool(const Tableau&)>& condition) const;
  Pmf statistic_pmf(Statistic s) const;

 private:
  int n_;
  Weights w_;
  Rational total_;
};

Rational oracle_event_prob(int n, const Weights& w, const ConstraintSet& c);
Pmf oracle_statistic_pmf(int n, const Weights& w, Statistic s);

}  // namespace staircase
