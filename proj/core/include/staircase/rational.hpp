#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// value^exponent with the convention 0^0 = 1.
Rational power(const Rational& value, unsigned exponent);
BigInt power(const BigInt& value, unsigned exponent);

BigInt factorial(unsigned k);
BigInt binomial(long top, long bottom);

double to_double(const Rational& value);

/// Parameters of the measure P_{n,alpha,beta}, carried as reciprocals
/// a = 1/alpha and b = 1/beta. a = 0 encodes alpha = infinity.
class Weights {
 public:
  /// Throws std::invalid_argument unless a >= 0, b >= 0 and a + b > 0.
  Weights(Rational a, Rational b);

  static Weights from_alpha_beta(const Rational& alpha, const Rational& beta);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// The transposed measure: alpha and beta exchanged.
  Weights swapped() const { return Weights(b_, a_); }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  Rational a_;
  Rational b_;
};

/// Four-symbol weights alpha, beta, gamma, delta (finite, nonnegative,
/// with alpha + gamma > 0 and beta + delta > 0).
struct FourWeights {
  Rational alpha{1};
  Rational beta{1};
  Rational gamma{0};
  Rational delta{0};

  /// Throws std::invalid_argument when the invariants fail.
  void check() const;
  /// The two-parameter weights (alpha + gamma, beta + delta) in reciprocal form.
  Weights merged() const;
};

/// Integer representation of (a, b) over a common denominator:
/// a = pa / d, b = pb / d. Counting engines work with pa, pb and d so
/// that every intermediate value is an integer.
struct ScaledWeights {
  BigInt pa;
  BigInt pb;
  BigInt d;

  explicit ScaledWeights(const Weights& w);
};

/// Exact distribution over the integer support 0..size()-1.
class Pmf {
 public:
  Pmf() = default;
  /// Throws std::invalid_argument if a mass is negative or the masses do
  /// not sum to exactly one.
  explicit Pmf(std::vector<Rational> masses);

  static Pmf point_mass(std::size_t k);

  std::size_t size() const { return masses_.size(); }
  const Rational& operator[](std::size_t k) const { return masses_[k]; }
  /// Mass at k, zero beyond the stored support.
  Rational at(std::size_t k) const;
  const std::vector<Rational>& masses() const { return masses_; }
  Rational mean() const;

  friend bool operator==(const Pmf& lhs, const Pmf& rhs);

 private:
  std::vector<Rational> masses_;
};

}  // namespace staircase
