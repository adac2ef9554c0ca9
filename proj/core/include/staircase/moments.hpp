#pragma once

#include <string>
#include <vector>

#include "staircase/events.hpp"
#include "staircase/formulas.hpp"
#include "staircase/rational.hpp"

namespace staircase {

/// mu[r] = E(Y)_r = E[Y(Y-1)...(Y-r+1)] for r = 0..max_order(); mu[0] = 1.
class FactorialMoments {
 public:
  FactorialMoments() : mu_{Rational(1)} {}
  /// Throws std::invalid_argument unless mu[0] == 1.
  explicit FactorialMoments(std::vector<Rational> mu);

  int max_order() const { return static_cast<int>(mu_.size()) - 1; }
  const Rational& operator[](int r) const { return mu_.at(static_cast<std::size_t>(r)); }
  const std::vector<Rational>& values() const { return mu_; }

  friend bool operator==(const FactorialMoments&, const FactorialMoments&) = default;

 private:
  std::vector<Rational> mu_;
};

/// Largest order accepted for second-diagonal moments: ceil((n-1)/2) + 1.
int second_diag_max_order(int n);

/// Exact E(A_n)_r (kind Alpha), E(B_n)_r (kind Beta) or E(X_n)_r (kind
/// NonEmpty) of the second diagonal for r = 0..R. Alpha moments use a
/// position recurrence over gap-2 tuples, O(n R); Beta moments swap a and
/// b. Throws std::out_of_range for R outside 0..second_diag_max_order(n).
FactorialMoments factorial_moments_second_diag(int n, const Weights& w, EventKind kind, int R);

/// Entry r (r = 0..R) is the sum over gap-g r-tuples in 1..m of
/// prod_l (b + j_l - 2l + 1), the numerator sum shared by the alpha
/// formulas on the second (g = 2) and third (g = 3) diagonals. One
/// position recurrence yields every r at once in O(R m).
std::vector<Rational> gap_alpha_numerator_sums(int R, int m, int gap, const Rational& b);

enum class ThirdDiagMode { ExactDp, MainTerm };

/// Third-diagonal factorial moments. ExactDp derives them from the exact
/// law of the statistic (n <= kMaxDpSize); MainTerm sums
/// third_diag_main_term over gap-3 tuples (any n). Kind is Alpha or
/// NonEmpty (Beta is accepted for ExactDp only).
FactorialMoments factorial_moments_third_diag(int n, const Weights& w, EventKind kind, int R,
                                              ThirdDiagMode mode);

/// r! times the sum of event_prob over all r-tuples of third-diagonal
/// boxes, skipping tuples with two columns exactly 2 apart (never jointly
/// filled). An independent cross-check of the ExactDp moments.
FactorialMoments third_diag_moments_by_tuples(int n, const Weights& w, EventKind kind, int R);

/// E(Y)_r computed from a law, r = 0..R.
FactorialMoments factorial_moments_of(const Pmf& p, int R);

/// Inverts a terminating moment vector (all moments beyond max_order()
/// vanish): P(k) = sum_{r>=k} (-1)^(r-k) mu_r / (k! (r-k)!). Throws
/// std::domain_error if a mass comes out negative.
Pmf pmf_from_factorial_moments(const FactorialMoments& m);

/// The statistic counting `kind` boxes on the second or third diagonal.
Statistic statistic_for(Diagonal d, EventKind kind);

/// Exact law of a second-diagonal statistic via its moments; checks that
/// the moment just above the support bound vanishes.
Pmf second_diag_pmf(int n, const Weights& w, EventKind kind);

/// Exact law of any statistic: the moment route for the second diagonal,
/// the counting engine otherwise (enumeration is not used).
Pmf exact_statistic_pmf(int n, const Weights& w, Statistic s);

/// Exact total variation distance between two laws.
Rational tv_distance(const Pmf& p, const Pmf& q);

/// Total variation distance to Pois(lambda), including the Poisson mass
/// beyond the support of p. Evaluated with 200-bit MPFR arithmetic.
struct TvDistance {
  double value = 0;
  /// value printed with 20 significant digits.
  std::string decimal;
  /// Poisson mass beyond the support of p (included in value).
  double poisson_tail = 0;
  /// Analytic upper bound on that tail: pi_K / (1 - lambda/(K+1)).
  double tail_bound = 0;
};
TvDistance tv_to_poisson(const Pmf& p, const Rational& lambda);

/// The Poisson limit paired with a statistic: 1/2 for alpha/beta counts,
/// 1 for non-empty counts. Throws std::invalid_argument for NA / NB.
Rational poisson_limit_for(Statistic s);

struct ConvergenceRow {
  int n = 0;
  /// E(Y)_r for r = 1..4.
  std::vector<Rational> moments;
  TvDistance tv;
};

struct ConvergenceReport {
  Statistic statistic;
  Rational a;
  Rational b;
  Rational lambda;
  std::vector<ConvergenceRow> rows;

  /// Header n,r1,r2,r3,r4,tv; moments as exact p/q, tv as decimal.
  std::string to_csv() const;
  std::string to_json() const;
};

/// One row per n (rows computed in parallel, output in input order).
/// Throws std::invalid_argument when lambda is not the limit paired with
/// the statistic.
ConvergenceReport convergence_report(const std::vector<int>& ns, const Weights& w, Statistic s,
                                     const Rational& lambda);

}  // namespace staircase
