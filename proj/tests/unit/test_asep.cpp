#include <gtest/gtest.h>

#include "staircase/asep.hpp"
#include "test_support.hpp"

namespace staircase {
namespace {

using testing::Q;

TEST(AsepTypes, StateFormatting) {
  const AsepState s{4, 0b1011};
  EXPECT_TRUE(s.filled(1));
  EXPECT_FALSE(s.filled(3));
  EXPECT_EQ(s.to_bits(), "1101");
  EXPECT_EQ(s.to_symbols(), "• • ∘ •");
  EXPECT_EQ(parse_type_convention("alpha_delta"), TypeConvention::AlphaDelta);
  EXPECT_EQ(to_string(TypeConvention::AlphaGamma), "alpha_gamma");
  EXPECT_THROW(parse_type_convention("beta"), std::invalid_argument);
}

TEST(AsepTypes, ExampleTypeUnderBothConventions) {
  const Tableau fig = parse_tableau(testing::kExampleFourSymbol);
  EXPECT_EQ(tableau_type(fig, TypeConvention::AlphaDelta).to_symbols(), "• • ∘ • ∘ ∘ ∘");
  EXPECT_NE(tableau_type(fig, TypeConvention::AlphaGamma).to_symbols(), "• • ∘ • ∘ ∘ ∘");
}

TEST(UqFill, ExampleFillAndWeight) {
  const FilledGrid g = uq_fill(parse_tableau(testing::kExampleFourSymbol));
  EXPECT_EQ(g.to_text(), "7\nAqqGquA\nqqqqqD\nuuBuG\nqqqD\nuuB\nqG\nB\n");
  EXPECT_EQ(g.weight, (Monomial{2, 3, 3, 2, 6, 12}));
  AsepParams p;
  p.gamma = 1;
  p.delta = 1;
  p.q = 2;
  EXPECT_EQ(g.weight.evaluate(p), 4096);
  EXPECT_THROW(uq_fill(Tableau(2)), std::invalid_argument);
}

TEST(AsepParams, Validation) {
  AsepParams p;
  EXPECT_NO_THROW(p.check());
  p.u = 0;
  p.q = 0;
  EXPECT_THROW(p.check(), std::invalid_argument);
  AsepParams no_input;
  no_input.alpha = 0;
  EXPECT_THROW(no_input.check(), std::invalid_argument);
  AsepParams scaled;
  scaled.alpha = 4;
  scaled.u = 2;
  EXPECT_EQ(scaled.normalized().alpha, 2);
  EXPECT_EQ(scaled.normalized().u, 1);
}

TEST(Generator, SingleSiteRates) {
  AsepParams p;
  p.alpha = 2;
  p.beta = 3;
  p.gamma = Q("1/2");
  p.delta = Q("1/3");
  const auto rates = asep_generator(1, p);
  EXPECT_EQ(rates[0][1], 2 + Q("1/3"));
  EXPECT_EQ(rates[1][0], 3 + Q("1/2"));
  // Stationary occupation (alpha + delta) / (alpha + beta + gamma + delta).
  const Pmf pi = steady_state_via_generator(1, p);
  EXPECT_EQ(pi[1], (2 + Q("1/3")) / (2 + 3 + Q("1/2") + Q("1/3")));
  EXPECT_THROW(steady_state_via_generator(kMaxAsepGeneratorSize + 1, p), std::out_of_range);
}

TEST(SteadyState, FactorizedSumMatchesDirectEnumeration) {
  AsepParams p;
  p.alpha = Q("3/2");
  p.beta = 2;
  p.gamma = Q("1/3");
  p.delta = Q("1/4");
  p.q = Q("1/2");
  for (int n = 1; n <= 4; ++n) {
    for (TypeConvention c : {TypeConvention::AlphaGamma, TypeConvention::AlphaDelta}) {
      EXPECT_EQ(steady_state_via_tableaux(n, p, c), steady_state_via_four_symbol_enumeration(n, p, c));
    }
  }
}

TEST(CrossValidation, OnlyAlphaDeltaMatchesWhenGammaDiffersFromDelta) {
  AsepParams p;
  p.alpha = 2;
  p.beta = Q("1/2");
  p.gamma = Q("1/3");
  p.delta = Q("3/2");
  p.q = Q("2/3");
  p.u = 3;
  for (int n = 1; n <= 4; ++n) {
    const CrossValidation cv = cross_validate(n, p);
    EXPECT_EQ(cv.params.u, 1);
    EXPECT_EQ(cv.matching(), std::vector<TypeConvention>{TypeConvention::AlphaDelta}) << "n=" << n;
  }
}

TEST(CrossValidation, TotallyAsymmetricCaseMatchesBothConventions) {
  AsepParams p;
  p.alpha = Q("2/3");
  p.beta = Q("5/4");
  p.q = 0;
  const CrossValidation cv = cross_validate(3, p);
  EXPECT_EQ(cv.matching().size(), 2U);
  EXPECT_NE(cv.to_json().find("\"matching\""), std::string::npos);
  EXPECT_THROW(cross_validate(7, p), std::out_of_range);
}

}  // namespace
}  // namespace staircase
