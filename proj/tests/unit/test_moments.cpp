#include <gtest/gtest.h>

#include <cmath>

#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/moments.hpp"
#include "test_support.hpp"

namespace staircase {
namespace {

using testing::Q;

TEST(FactorialMoments, RequireUnitZerothMoment) {
  EXPECT_THROW(FactorialMoments({Q("2")}), std::invalid_argument);
  EXPECT_EQ(FactorialMoments().max_order(), 0);
}

TEST(FactorialMoments, OfAPmf) {
  // Y uniform on {0, 1, 2}: E Y = 1, E Y(Y-1) = 2/3.
  const Pmf p({Q("1/3"), Q("1/3"), Q("1/3")});
  const FactorialMoments m = factorial_moments_of(p, 3);
  EXPECT_EQ(m[1], 1);
  EXPECT_EQ(m[2], Q("2/3"));
  EXPECT_EQ(m[3], 0);
  EXPECT_EQ(pmf_from_factorial_moments(m), p);
}

TEST(FactorialMoments, InversionRejectsNonLaws) {
  EXPECT_THROW(pmf_from_factorial_moments(FactorialMoments({Q("1"), Q("3"), Q("0")})), std::domain_error);
}

TEST(SecondDiagonal, MomentsMatchOracleLaws) {
  for (const auto& w : {Weights(1, 1), Weights(Q("1/2"), 3), Weights(0, 2)}) {
    for (int n = 2; n <= 7; ++n) {
      const int R = second_diag_max_order(n);
      for (EventKind kind : {EventKind::Alpha, EventKind::Beta, EventKind::NonEmpty}) {
        const Statistic s = statistic_for(Diagonal::Second, kind);
        const Pmf oracle = oracle_statistic_pmf(n, w, s);
        EXPECT_EQ(factorial_moments_second_diag(n, w, kind, R), factorial_moments_of(oracle, R))
            << to_string(s) << " n=" << n;
        EXPECT_EQ(second_diag_pmf(n, w, kind), oracle);
      }
    }
  }
  EXPECT_THROW(factorial_moments_second_diag(5, Weights(1, 1), EventKind::Alpha, second_diag_max_order(5) + 1),
               std::out_of_range);
}

TEST(SecondDiagonal, MomentRecurrenceMatchesCountingEngineAtLargerSizes) {
  const Weights w(Q("2/3"), Q("1/2"));
  for (int n : {12, 16}) {
    for (EventKind kind : {EventKind::Alpha, EventKind::NonEmpty}) {
      const Pmf dp = statistic_pmf_dp(n, w, statistic_for(Diagonal::Second, kind));
      EXPECT_EQ(factorial_moments_second_diag(n, w, kind, 4), factorial_moments_of(dp, 4));
    }
  }
}

TEST(ThirdDiagonal, ExactMomentsAgreeWithTupleSums) {
  for (const auto& w : {Weights(1, 1), Weights(3, Q("1/2"))}) {
    for (int n = 3; n <= 9; ++n) {
      for (EventKind kind : {EventKind::Alpha, EventKind::NonEmpty}) {
        EXPECT_EQ(factorial_moments_third_diag(n, w, kind, 2, ThirdDiagMode::ExactDp),
                  third_diag_moments_by_tuples(n, w, kind, 2))
            << "n=" << n;
      }
    }
  }
}

TEST(ThirdDiagonal, MainTermIsCloseToExact) {
  const Weights w(1, 1);
  const auto exact = factorial_moments_third_diag(18, w, EventKind::NonEmpty, 2, ThirdDiagMode::ExactDp);
  const auto main = factorial_moments_third_diag(18, w, EventKind::NonEmpty, 2, ThirdDiagMode::MainTerm);
  EXPECT_LT(std::abs(to_double(exact[1] - main[1])), 0.1);
  EXPECT_NO_THROW(factorial_moments_third_diag(200, w, EventKind::Alpha, 3, ThirdDiagMode::MainTerm));
}

TEST(ExactLaws, AllStatisticsMatchOracle) {
  const Statistic all[] = {Statistic::A2, Statistic::B2, Statistic::X2, Statistic::A3,
                           Statistic::B3, Statistic::X3, Statistic::NAlpha, Statistic::NBeta};
  for (Statistic s : all) {
    EXPECT_EQ(exact_statistic_pmf(6, Weights(Q("1/2"), 1), s), oracle_statistic_pmf(6, Weights(Q("1/2"), 1), s))
        << to_string(s);
  }
}

TEST(Distances, ExactTotalVariation) {
  EXPECT_EQ(tv_distance(Pmf::point_mass(0), Pmf::point_mass(2)), 1);
  EXPECT_EQ(tv_distance(Pmf({Q("1/2"), Q("1/2")}), Pmf({Q("1/4"), Q("1/4"), Q("1/2")})), Q("1/2"));
}

TEST(Distances, PoissonDistanceOfPointMass) {
  // TV(delta_0, Pois(lambda)) = 1 - e^(-lambda).
  const TvDistance d = tv_to_poisson(Pmf::point_mass(0), Q("1/2"));
  EXPECT_NEAR(d.value, 1 - std::exp(-0.5), 1e-15);
  EXPECT_LE(d.poisson_tail, d.tail_bound);
  EXPECT_EQ(d.decimal.substr(0, 10), "0.39346934");
}

TEST(Distances, PoissonLimits) {
  EXPECT_EQ(poisson_limit_for(Statistic::A2), Q("1/2"));
  EXPECT_EQ(poisson_limit_for(Statistic::X3), 1);
  EXPECT_THROW(poisson_limit_for(Statistic::NAlpha), std::invalid_argument);
}

TEST(Convergence, ReportMatchesGoldenAndRejectsWrongLimit) {
  const auto report = convergence_report({8, 16, 32, 64, 128, 256}, Weights(1, 1), Statistic::X2, Q("1"));
  EXPECT_EQ(report.to_csv(), testing::read_golden("converge_X2_a1_b1.csv"));
  EXPECT_THROW(convergence_report({8}, Weights(1, 1), Statistic::X2, Q("1/2")), std::invalid_argument);
}

// The distance to the Poisson limit roughly halves when n doubles.
TEST(ConvergenceProperty, DistanceHalvesWithSize) {
  for (Statistic s : {Statistic::X2, Statistic::A2}) {
    const auto report = convergence_report({8, 16, 32, 64, 128, 256}, Weights(1, 1), s, poisson_limit_for(s));
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      const double ratio = report.rows[i - 1].tv.value / report.rows[i].tv.value;
      EXPECT_GE(ratio, 1.6) << to_string(s) << " n=" << report.rows[i].n;
      EXPECT_LE(ratio, 2.4) << to_string(s) << " n=" << report.rows[i].n;
    }
  }
}

TEST(ConvergenceProperty, FirstMomentOfNonEmptyCount) {
  // E X_n = (n-1)/(n+a+b-1) for every n.
  const Weights w(Q("1/2"), 2);
  for (int n = 2; n <= 40; n += 7) {
    EXPECT_EQ(factorial_moments_second_diag(n, w, EventKind::NonEmpty, 1)[1],
              Rational(n - 1) / (Rational(n) + w.a() + w.b() - 1));
  }
}

}  // namespace
}  // namespace staircase
