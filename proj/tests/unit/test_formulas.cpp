#include <gtest/gtest.h>

#include "checks.hpp"
#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/formulas.hpp"
#include "test_support.hpp"

namespace staircase {
namespace {

using testing::Q;

TEST(Factorials, RisingAndFalling) {
  EXPECT_EQ(rising(Q("3"), 4), 3 * 4 * 5 * 6);
  EXPECT_EQ(falling(Q("6"), 3), 6 * 5 * 4);
  EXPECT_EQ(rising(Q("1/2"), 2), Q("3/4"));
  EXPECT_EQ(rising(Q("7"), 0), 1);
  EXPECT_EQ(rising_falling(Q("5"), 2, FactorialKind::Falling), 20);
  EXPECT_THROW(rising(Q("1"), -1), std::invalid_argument);
}

TEST(Partition, ClosedFormExamples) {
  EXPECT_EQ(partition_closed(1, FourWeights{1, 2, 3, 4}), 10);
  // n = 2: (sum)(sum + (alpha+gamma)(beta+delta)).
  EXPECT_EQ(partition_closed(2, FourWeights{1, 2, 3, 4}), 10 * (10 + 4 * 6));
  EXPECT_EQ(partition_closed(3, FourWeights{1, 1, 1, 1}), 384);
  EXPECT_EQ(partition_closed(3, Q("1"), Q("1")), 24);
  EXPECT_EQ(normalized_partition_closed(4, Weights(1, 1)), 120);
  EXPECT_EQ(normalized_partition_closed(3, Weights(0, Q("1/2"))), Q("1/2") * Q("3/2") * Q("5/2"));
}

TEST(Weights, Validation) {
  EXPECT_THROW(Weights(0, 0), std::invalid_argument);
  EXPECT_THROW(Weights(-1, 1), std::invalid_argument);
  EXPECT_EQ(Weights::from_alpha_beta(2, Q("1/3")), Weights(Q("1/2"), 3));
  EXPECT_EQ(Weights(1, 2).swapped(), Weights(2, 1));
  EXPECT_THROW((FourWeights{0, 1, 0, 1}.check()), std::invalid_argument);
  EXPECT_EQ((FourWeights{1, 2, 1, 2}.merged()), Weights(Q("1/2"), Q("1/4")));
}

TEST(BoxLaw, MainDiagonalAndInteriorExamples) {
  const Weights w(1, 1);
  // Top-right diagonal box of size 3: P(alpha) = (3-1+1)/(3+1+1-1).
  const BoxLaw top = box_law(3, w, {1, 3});
  EXPECT_EQ(top.alpha, Q("3/4"));
  EXPECT_EQ(top.beta, Q("1/4"));
  EXPECT_EQ(top.empty, 0);
  // Interior box (1,1) of size 3: (j-1+b)/((i+j+a+b-1)(i+j+a+b-2)) = 1/6.
  const BoxLaw corner = box_law(3, w, {1, 1});
  EXPECT_EQ(corner.alpha, Q("1/6"));
  EXPECT_EQ(corner.beta, Q("1/6"));
  EXPECT_EQ(corner.empty, Q("2/3"));
  EXPECT_THROW(box_law(3, w, {3, 2}), std::out_of_range);
}

TEST(BoxLaw, AgreesWithCountingEngine) {
  for (const auto& w : testkit::small_weight_grid()) {
    for (int n = 1; n <= 9; n += 4) {
      for (const Box& b : sweep_order(n)) {
        const BoxLaw law = box_law(n, w, b);
        EXPECT_EQ(law.alpha + law.beta + law.empty, 1);
        EXPECT_EQ(law.alpha, event_prob(n, w, ConstraintSet{{b, Requirement::MustAlpha}}));
        EXPECT_EQ(law.beta, event_prob(n, w, ConstraintSet{{b, Requirement::MustBeta}}));
      }
    }
  }
}

TEST(IndexTuple, ParsingAndGaps) {
  const IndexTuple t = parse_index_tuple("1,3,7");
  EXPECT_EQ(t.r(), 3);
  EXPECT_EQ(t.j(2), 3);
  EXPECT_EQ(t.min_gap(), 2);
  EXPECT_EQ(t.gap_class(), GapClass::Gap2);
  EXPECT_TRUE(t.satisfies(GapClass::Gap2));
  EXPECT_FALSE(t.satisfies(GapClass::Gap3));
  EXPECT_EQ(to_string(t), "(1,3,7)");
  EXPECT_EQ(IndexTuple({4}).gap_class(), GapClass::Gap3);
  EXPECT_THROW(parse_index_tuple("3,2"), std::invalid_argument);
  EXPECT_THROW(parse_index_tuple("0,2"), std::invalid_argument);
  EXPECT_THROW(parse_index_tuple("1,x"), std::invalid_argument);
  EXPECT_THROW(IndexTuple({1, 2}, GapClass::Gap2), std::invalid_argument);
}

TEST(Diagonals, BoxesAndEvents) {
  EXPECT_EQ(diagonal_box(5, Diagonal::Main, 2), (Box{4, 2}));
  EXPECT_EQ(diagonal_box(5, Diagonal::Second, 2), (Box{3, 2}));
  EXPECT_EQ(diagonal_box(5, Diagonal::Third, 2), (Box{2, 2}));
  const ConstraintSet e = diagonal_event(6, Diagonal::Second, IndexTuple({1, 4}), EventKind::NonEmpty);
  EXPECT_EQ(e.size(), 2U);
  EXPECT_EQ(e.at({5, 1}), Requirement::MustNonEmpty);
  EXPECT_EQ(e.at({2, 4}), Requirement::MustNonEmpty);
}

TEST(SecondDiagonal, SingleBoxExamples) {
  const Weights w(1, 1);
  // P(alpha in (n-j, j)) = (b + j - 1) / ((n+a+b-1)(n+a+b-2)).
  EXPECT_EQ(second_diag_joint_alpha(5, w, IndexTuple({2})).value, Q("2/30"));
  // P(non-empty) = 1 / (n+a+b-1).
  EXPECT_EQ(second_diag_joint_nonempty(5, w, IndexTuple({3})).value, Q("1/6"));
}

TEST(SecondDiagonal, AdjacentColumnsAreStructuralZeros) {
  const Weights w(Q("1/2"), 2);
  for (auto* f : {&second_diag_joint_alpha, &second_diag_joint_beta, &second_diag_joint_nonempty}) {
    const FormulaValue v = (*f)(6, w, IndexTuple({2, 3}));
    EXPECT_EQ(v.value, 0);
    EXPECT_EQ(v.reason, ZeroReason::GapViolation);
    EXPECT_EQ(to_string(v.reason), "gap-violation");
    EXPECT_EQ(event_prob(6, w, diagonal_event(6, Diagonal::Second, IndexTuple({2, 3}), EventKind::NonEmpty)), 0);
  }
  EXPECT_THROW(second_diag_joint_alpha(4, w, IndexTuple({4})), std::out_of_range);
}

TEST(SecondDiagonal, JointLawsMatchCountingEngineBeyondOracleSizes) {
  for (const auto& w : {Weights(1, 1), Weights(Q("2/3"), Q("5/2")), Weights(0, 1)}) {
    for (int n : {9, 12}) {
      for (const auto& t : gap_index_sets(3, n - 1)) {
        EXPECT_EQ(second_diag_joint_alpha(n, w, t).value,
                  event_prob(n, w, diagonal_event(n, Diagonal::Second, t, EventKind::Alpha)));
        EXPECT_EQ(second_diag_joint_beta(n, w, t).value,
                  event_prob(n, w, diagonal_event(n, Diagonal::Second, t, EventKind::Beta)));
        EXPECT_EQ(second_diag_joint_nonempty(n, w, t).value,
                  event_prob(n, w, diagonal_event(n, Diagonal::Second, t, EventKind::NonEmpty)));
      }
    }
  }
}

TEST(SecondDiagonal, BetaFormulaIsAlphaUnderTransposition) {
  const Weights w(Q("1/3"), 4);
  const IndexTuple t({1, 4, 6});
  const IndexTuple mirrored({1, 3, 6});  // 7 - j for n = 7
  EXPECT_EQ(second_diag_joint_beta(7, w, t).value, second_diag_joint_alpha(7, w.swapped(), mirrored).value);
}

TEST(ThirdDiagonal, MainTermFlagsOrderOnlyTuples) {
  const Weights w(1, 1);
  const FormulaValue close = third_diag_main_term(8, w, IndexTuple({2, 4}), EventKind::Alpha);
  EXPECT_TRUE(close.order_only);
  EXPECT_EQ(close.value, 0);
  const FormulaValue far = third_diag_main_term(8, w, IndexTuple({2, 5}), EventKind::NonEmpty);
  EXPECT_FALSE(far.order_only);
  EXPECT_GT(far.value, 0);
  EXPECT_THROW(third_diag_main_term(8, w, IndexTuple({7}), EventKind::Alpha), std::out_of_range);
  EXPECT_THROW(third_diag_main_term(8, w, IndexTuple({3}), EventKind::Beta), std::invalid_argument);
}

TEST(GapTuples, CountsAndListing) {
  EXPECT_EQ(gap_tuple_count(2, 5), 6);   // binomial(4, 2)
  EXPECT_EQ(gap_tuple_count(3, 5), 1);   // {1,3,5}
  EXPECT_EQ(gap_tuple_count(2, 7, 3), 10);  // binomial(6, 2)
  EXPECT_EQ(gap_tuple_count(4, 5), 0);
  std::vector<std::vector<int>> listed;
  for_each_gap_tuple(2, 4, 2, [&](const std::vector<int>& c) { listed.push_back(c); });
  EXPECT_EQ(listed, (std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}}));
  for (int r = 1; r <= 4; ++r) {
    for (int m = 0; m <= 12; ++m) {
      EXPECT_EQ(BigInt(static_cast<unsigned long>(gap_index_sets(r, m).size())), gap_tuple_count(r, m));
    }
  }
}

TEST(GapTuples, SumIdentity) {
  // r = 1: sum of j over 1..m = (m+1) m / 2.
  EXPECT_EQ(lemma_la_sum(1, 10).lhs, 55);
  for (int r = 1; r <= 3; ++r) {
    for (int m = 0; m <= 15; ++m) {
      const LemmaSides s = lemma_la_sum(r, m);
      EXPECT_EQ(s.lhs, s.rhs) << "r=" << r << " m=" << m;
    }
  }
  EXPECT_THROW(lemma_la_sum(0, 4), std::invalid_argument);
}

TEST(StructuralChecks, SubtableauAndCornerLawsAtSmallSizes) {
  const Weights w(Q("1/2"), 3);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; i + j <= n + 1; ++j) {
        const auto r = testkit::subtableau_law(n, w, i, j);
        EXPECT_TRUE(r.ok) << r.detail;
      }
    }
    const auto beta = testkit::beta_corner_law(n, w);
    EXPECT_TRUE(beta.ok) << beta.detail;
    if (n >= 3) {
      const auto alpha = testkit::alpha_corner_law(n, w);
      EXPECT_TRUE(alpha.ok) << alpha.detail;
    }
  }
}

TEST(StructuralChecks, SwitchIdentityAndCrowdedBoxes) {
  for (const auto& w : {Weights(1, 1), Weights(2, Q("1/3"))}) {
    // Third-diagonal columns exactly 2 apart are never jointly filled, so
    // single columns are the informative cases at n = 7.
    for (int j : {3, 4, 5}) {
      const auto s = testkit::switch_beta_sides(7, w, IndexTuple({j}));
      EXPECT_EQ(s.lhs, s.rhs);
      EXPECT_GT(s.lhs, 0);
    }
    for (int k = 1; k <= 8; ++k) {
      EXPECT_EQ(testkit::crowded_third_diagonal_probability(10, w, k),
                testkit::crowded_third_diagonal_reference(10, w));
    }
  }
  EXPECT_THROW(testkit::switch_beta_sides(7, Weights(1, 1), IndexTuple({2})), std::invalid_argument);
}

}  // namespace
}  // namespace staircase
