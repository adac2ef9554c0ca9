#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/events.hpp"
#include "staircase/rational.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Deterministic 64-bit seeded stream. Not shareable between threads; use
/// independently seeded streams for concurrent sampling.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; identical across platforms.
/// Throws std::invalid_argument for bound == 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
BigInt uniform_below(Rng& rng, const BigInt& bound);
/// Exact Bernoulli(p) for rational p in [0, 1].
bool bernoulli(Rng& rng, const Rational& p);

enum class SampleMethod {
  /// Exhaustive table of all tableaux, grouped by weight class; n <= 9.
  EnumAlias,
  /// Box-by-box draws from exact conditional laws; n <= 22.
  ChainRule,
};

/// Accepts "enum_alias" and "chain_rule".
SampleMethod parse_sample_method(std::string_view name);
std::string to_string(SampleMethod m);

/// Exact draw from P_{n,alpha,beta}. Tables are cached per (n, a, b) and
/// shared between threads. Throws std::out_of_range for unsupported sizes.
Tableau sample(int n, const Weights& w, Rng& rng, SampleMethod method);

/// Each Alpha becomes Gamma with probability gamma/(alpha+gamma) and each
/// Beta becomes Delta with probability delta/(beta+delta), independently.
/// Throws std::invalid_argument if t already holds Gamma or Delta.
Tableau randomize_four_params(const Tableau& t, const FourWeights& fw, Rng& rng);

/// Draw from the four-parameter measure: sample with weights
/// (alpha+gamma, beta+delta), then randomize.
Tableau sample_four_params(int n, const FourWeights& fw, Rng& rng, SampleMethod method);

struct EmpiricalPmf {
  Pmf pmf;
  /// Binomial standard error sqrt(p(1-p)/N) of each bin.
  std::vector<double> standard_errors;
  std::uint64_t samples = 0;
};

/// Monte Carlo law of a statistic. Throws std::invalid_argument for zero
/// samples.
EmpiricalPmf empirical_pmf(int n, const Weights& w, Statistic s, std::uint64_t samples, Rng& rng,
                           SampleMethod method);

}  // namespace staircase
