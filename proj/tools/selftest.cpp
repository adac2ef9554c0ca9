#include "selftest.hpp"

#include <stdexcept>

#include "staircase/asep.hpp"
#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/formulas.hpp"
#include "staircase/moments.hpp"

namespace staircase::cli {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void expect_equal(const Rational& got, const Rational& want, const std::string& what) {
    check(got == want, what + ": got " + to_string(got) + ", expected " + to_string(want));
  }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (ok) return;
    if (result_.mismatches++ == 0) result_.first_mismatch = what;
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<Weights> weight_grid() {
  return {Weights(1, 1), Weights(Rational(1, 2), 1), Weights(3, Rational(1, 2)), Weights(0, 2),
          Weights(Rational(5, 3), 0)};
}

std::string where(int n, const Weights& w) {
  return "n=" + std::to_string(n) + " a=" + to_string(w.a()) + " b=" + to_string(w.b());
}

std::string box_name(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

std::vector<Box> all_boxes(int n) { return sweep_order(n); }

SuiteResult partition_suite(int max_n) {
  Suite s("partition");
  const std::vector<std::pair<Rational, Rational>> ab = {{1, 1}, {Rational(2, 3), 5}, {7, Rational(1, 4)}};
  const std::vector<FourWeights> four = {{1, 1, 1, 1},
                                         {Rational(1, 2), 3, Rational(2, 5), 1},
                                         {2, Rational(1, 3), 0, Rational(7, 2)}};
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& [alpha, beta] : ab) {
      s.expect_equal(brute_partition(n, alpha, beta), partition_closed(n, alpha, beta),
                     "alpha/beta partition n=" + std::to_string(n));
    }
    s.check(count_tableaux(n) == factorial(static_cast<unsigned>(n + 1)).get_ui(),
            "tableau count n=" + std::to_string(n));
    if (n > std::min(max_n, 5)) continue;
    for (const auto& fw : four) {
      s.expect_equal(brute_partition(n, fw), partition_closed(n, fw),
                     "four-parameter partition n=" + std::to_string(n));
    }
  }
  return s.finish();
}

SuiteResult box_law_suite(int max_n) {
  Suite s("box_law");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : weight_grid()) {
      OracleMeasure oracle(n, w);
      for (Box b : all_boxes(n)) {
        const BoxLaw law = box_law(n, w, b);
        const std::string at = where(n, w) + " box " + box_name(b);
        s.expect_equal(law.alpha, oracle.prob(ConstraintSet{{b, Requirement::MustAlpha}}), "P(alpha) " + at);
        s.expect_equal(law.beta, oracle.prob(ConstraintSet{{b, Requirement::MustBeta}}), "P(beta) " + at);
        s.expect_equal(law.empty, oracle.prob(ConstraintSet{{b, Requirement::MustEmpty}}), "P(empty) " + at);
      }
    }
  }
  return s.finish();
}

SuiteResult dp_event_suite(int max_n) {
  Suite s("dp_event");
  const Requirement reqs[] = {Requirement::MustAlpha, Requirement::MustBeta, Requirement::MustNonEmpty,
                              Requirement::MustEmpty};
  const int pair_cap = std::min(max_n, 4);
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : weight_grid()) {
      OracleMeasure oracle(n, w);
      s.expect_equal(constrained_partition(n, w, {}), normalized_partition_closed(n, w),
                     "normalizer " + where(n, w));
      const auto boxes = all_boxes(n);
      for (std::size_t x = 0; x < boxes.size(); ++x) {
        for (Requirement rx : reqs) {
          ConstraintSet c{{boxes[x], rx}};
          s.expect_equal(event_prob(n, w, c), oracle.prob(c), "single box " + box_name(boxes[x]) + " " + where(n, w));
          if (n > pair_cap) continue;
          for (std::size_t y = x + 1; y < boxes.size(); ++y) {
            for (Requirement ry : reqs) {
              ConstraintSet cc{{boxes[x], rx}, {boxes[y], ry}};
              s.expect_equal(event_prob(n, w, cc), oracle.prob(cc),
                             "box pair " + box_name(boxes[x]) + box_name(boxes[y]) + " " + where(n, w));
            }
          }
        }
      }
    }
  }
  return s.finish();
}

SuiteResult joint_suite(int max_n) {
  Suite s("second_diagonal_joint");
  for (int n = 2; n <= max_n + 1 && n <= kMaxEnumSize; ++n) {
    for (const auto& w : weight_grid()) {
      OracleMeasure oracle(n, w);
      for (int r = 1; r <= 3; ++r) {
        for_each_gap_tuple(r, n - 1, 1, [&](const std::vector<int>& cols) {
          const IndexTuple t(cols);
          const std::string at = where(n, w) + " cols " + to_string(t);
          s.expect_equal(second_diag_joint_alpha(n, w, t).value,
                         oracle.prob(diagonal_event(n, Diagonal::Second, t, EventKind::Alpha)), "alpha " + at);
          s.expect_equal(second_diag_joint_beta(n, w, t).value,
                         oracle.prob(diagonal_event(n, Diagonal::Second, t, EventKind::Beta)), "beta " + at);
          s.expect_equal(second_diag_joint_nonempty(n, w, t).value,
                         oracle.prob(diagonal_event(n, Diagonal::Second, t, EventKind::NonEmpty)),
                         "nonempty " + at);
        });
      }
    }
  }
  return s.finish();
}

SuiteResult statistics_suite(int max_n) {
  Suite s("statistic_laws");
  const Statistic stats[] = {Statistic::A2, Statistic::B2, Statistic::X2, Statistic::A3,
                             Statistic::B3, Statistic::X3, Statistic::NAlpha, Statistic::NBeta};
  for (int n = 1; n <= max_n + 1 && n <= kMaxEnumSize; ++n) {
    for (const auto& w : weight_grid()) {
      OracleMeasure oracle(n, w);
      for (Statistic st : stats) {
        const Pmf want = oracle.statistic_pmf(st);
        const std::string at = to_string(st) + " " + where(n, w);
        s.check(statistic_pmf_dp(n, w, st) == want, "counting-engine law of " + at);
        s.check(exact_statistic_pmf(n, w, st) == want, "exact law of " + at);
      }
      for (EventKind kind : {EventKind::Alpha, EventKind::Beta, EventKind::NonEmpty}) {
        const int R = second_diag_max_order(n);
        const Pmf law = oracle.statistic_pmf(statistic_for(Diagonal::Second, kind));
        s.check(factorial_moments_second_diag(n, w, kind, R) == factorial_moments_of(law, R),
                "second-diagonal factorial moments " + where(n, w));
      }
    }
  }
  return s.finish();
}

SuiteResult chain_rule_suite(int max_n) {
  Suite s("chain_rule");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : weight_grid()) {
      OracleMeasure oracle(n, w);
      ChainRuleModel model(n, w);
      Rational total(0);
      for_each_tableau(n, [&](const Tableau& t) {
        const Rational p = model.path_probability(t);
        total += p;
        s.expect_equal(p, oracle.prob(t), "path probability " + where(n, w));
      });
      s.expect_equal(total, 1, "path probabilities sum " + where(n, w));
    }
  }
  return s.finish();
}

SuiteResult asep_suite(int max_n) {
  Suite s("asep");
  const std::vector<AsepParams> rates = {
      {1, 1, 0, 0, 1, 1},
      {Rational(2, 3), Rational(5, 7), Rational(1, 4), Rational(3, 2), Rational(2, 5), 1},
      {3, Rational(1, 2), 2, Rational(1, 3), 0, 1},
  };
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for (const auto& p : rates) {
      const Pmf generator = steady_state_via_generator(n, p);
      const Pmf tableaux = steady_state_via_tableaux(n, p, TypeConvention::AlphaDelta);
      s.check(tableaux == generator, "alpha_delta steady state n=" + std::to_string(n));
      if (n <= 3) {
        s.check(steady_state_via_four_symbol_enumeration(n, p, TypeConvention::AlphaDelta) == tableaux,
                "four-symbol steady state n=" + std::to_string(n));
      }
    }
  }
  return s.finish();
}

}  // namespace

std::vector<SuiteResult> run_selftest(int max_n) {
  if (max_n < kSelftestMinSize || max_n > kSelftestMaxSize) {
    throw std::out_of_range("selftest size must lie in " + std::to_string(kSelftestMinSize) + ".." +
                            std::to_string(kSelftestMaxSize));
  }
  return {partition_suite(max_n), box_law_suite(max_n),    dp_event_suite(max_n), joint_suite(max_n),
          statistics_suite(max_n), chain_rule_suite(max_n), asep_suite(max_n)};
}

}  // namespace staircase::cli
