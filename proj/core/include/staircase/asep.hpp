#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Largest sizes accepted by the two steady-state backends.
inline constexpr int kMaxAsepTableauxSize = 8;
inline constexpr int kMaxAsepGeneratorSize = 10;

/// Boundary rates (particles enter at site 1 with rate alpha and leave it
/// with rate gamma; enter at site n with rate delta and leave it with rate
/// beta) and hop rates u (right) and q (left).
struct AsepParams {
  Rational alpha{1};
  Rational beta{1};
  Rational gamma{0};
  Rational delta{0};
  Rational q{1};
  Rational u{1};

  /// Throws std::invalid_argument for negative rates, u + q = 0, or no
  /// positive in-rate (alpha + delta = 0).
  void check() const;
  FourWeights four_weights() const { return {alpha, beta, gamma, delta}; }
  /// All rates divided by u (requires u > 0).
  AsepParams normalized() const;
};

/// Which diagonal symbols mark a filled site.
enum class TypeConvention {
  /// Filled iff the diagonal symbol is alpha or gamma.
  AlphaGamma,
  /// Filled iff the diagonal symbol is alpha or delta.
  AlphaDelta,
};

/// Accepts "alpha_gamma" and "alpha_delta".
TypeConvention parse_type_convention(std::string_view name);
std::string to_string(TypeConvention c);

/// Occupation of n sites; bit i-1 of `bits` is site i.
struct AsepState {
  int n = 0;
  std::uint32_t bits = 0;

  bool filled(int site) const { return ((bits >> (site - 1)) & 1U) != 0; }
  /// "1101000": site 1 first.
  std::string to_bits() const;
  /// Filled and empty sites as U+2022 and U+2218 separated by spaces.
  std::string to_symbols() const;
  friend bool operator==(const AsepState&, const AsepState&) = default;
};

/// Type of a tableau: site i reads the diagonal box (i, n+1-i), so site 1
/// is the top-right end of the diagonal.
AsepState tableau_type(const Tableau& t, TypeConvention convention = TypeConvention::AlphaGamma);

/// Exponents of alpha, beta, gamma, delta, u, q in a filled tableau.
struct Monomial {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  int u = 0;
  int q = 0;

  Rational evaluate(const AsepParams& p) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class Fill : std::uint8_t { Symbol, U, Q };

/// A tableau whose empty boxes carry u or q.
struct FilledGrid {
  Tableau tableau;
  /// fills[row-1][col-1]; Symbol for boxes holding a symbol.
  std::vector<std::vector<Fill>> fills;
  Monomial weight;

  /// The text form with 'u' and 'q' in place of the empty boxes.
  std::string to_text() const;
};

/// Empty boxes left of a beta get u and left of a delta get q; each
/// remaining empty box gets u if the nearest symbol below it is alpha or
/// delta, and q otherwise. Throws std::invalid_argument for invalid t.
FilledGrid uq_fill(const Tableau& t);

/// Law of the type of a random filled tableau: the weight of tableaux of
/// each type over Z_n(alpha, beta, gamma, delta, q, u). Masses are indexed
/// by AsepState::bits. Throws std::out_of_range for n > 8.
Pmf steady_state_via_tableaux(int n, const AsepParams& p, TypeConvention convention);

/// Same law by summing uq_fill weights over all four-symbol tableaux
/// directly (n <= 6); slower cross-check of the factorized sum.
Pmf steady_state_via_four_symbol_enumeration(int n, const AsepParams& p, TypeConvention convention);

/// Transition rates of the exclusion process: rates[from][to].
std::vector<std::vector<Rational>> asep_generator(int n, const AsepParams& p);

/// Stationary law of the continuous-time chain by exact rational
/// elimination. Throws std::out_of_range for n > 10 and
/// std::domain_error if the stationary law is not unique.
Pmf steady_state_via_generator(int n, const AsepParams& p);

struct StateComparison {
  AsepState state;
  Rational tableaux_prob;
  Rational generator_prob;
  bool equal = false;
};

struct ConventionResult {
  TypeConvention convention;
  bool matches = false;
  std::vector<StateComparison> per_state;
};

struct CrossValidation {
  int n = 0;
  /// Rates after dividing by u.
  AsepParams params;
  std::vector<ConventionResult> results;

  /// Conventions whose tableaux law equals the generator law at every state.
  std::vector<TypeConvention> matching() const;
  /// JSON array with one {n, params, convention, per_state} object per
  /// convention, followed by the list of matching conventions.
  std::string to_json() const;
};

/// Compares both backends for each convention after normalizing u to 1.
/// Throws std::out_of_range for n outside 1..6 and std::invalid_argument
/// for u = 0.
CrossValidation cross_validate(int n, const AsepParams& p,
                               const std::vector<TypeConvention>& conventions = {
                                   TypeConvention::AlphaGamma, TypeConvention::AlphaDelta});

}  // namespace staircase
