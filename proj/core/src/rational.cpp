#include "staircase/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace staircase {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': expected p or p/q with integer p and positive integer q");
  }
  BigInt d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  }
  Rational value(parse_integer(num), d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational power(const Rational& value, unsigned exponent) {
  Rational result(1);
  Rational base = value;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigInt power(const BigInt& value, unsigned exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), value.get_mpz_t(), exponent);
  return result;
}

BigInt factorial(unsigned k) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return result;
}

double to_double(const Rational& value) { return value.get_d(); }

Weights::Weights(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (a_ < 0 || b_ < 0) {
    throw std::invalid_argument("weights require a >= 0 and b >= 0 (a = 1/alpha, b = 1/beta)");
  }
  if (a_ == 0 && b_ == 0) {
    throw std::invalid_argument(
        "a = b = 0 (alpha = beta = infinity) is not supported: the limit depends on the "
        "direction of approach");
  }
}

Weights Weights::from_alpha_beta(const Rational& alpha, const Rational& beta) {
  if (alpha <= 0 || beta <= 0) {
    throw std::invalid_argument("alpha and beta must be positive");
  }
  return Weights(1 / alpha, 1 / beta);
}

void FourWeights::check() const {
  if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0) {
    throw std::invalid_argument("four-parameter weights must be nonnegative");
  }
  if (alpha + gamma <= 0 || beta + delta <= 0) {
    throw std::invalid_argument("four-parameter weights need alpha + gamma > 0 and beta + delta > 0");
  }
}

Weights FourWeights::merged() const {
  check();
  return Weights::from_alpha_beta(alpha + gamma, beta + delta);
}

ScaledWeights::ScaledWeights(const Weights& w) {
  mpz_lcm(d.get_mpz_t(), w.a().get_den_mpz_t(), w.b().get_den_mpz_t());
  pa = w.a().get_num() * (d / w.a().get_den());
  pb = w.b().get_num() * (d / w.b().get_den());
}

Pmf::Pmf(std::vector<Rational> masses) : masses_(std::move(masses)) {
  Rational total(0);
  for (auto& m : masses_) {
    m.canonicalize();
    if (m < 0) throw std::invalid_argument("pmf has a negative mass");
    total += m;
  }
  if (total != 1) {
    throw std::invalid_argument("pmf masses sum to " + to_string(total) + ", not 1");
  }
}

Pmf Pmf::point_mass(std::size_t k) {
  std::vector<Rational> masses(k + 1, Rational(0));
  masses[k] = 1;
  return Pmf(std::move(masses));
}

Rational Pmf::at(std::size_t k) const { return k < masses_.size() ? masses_[k] : Rational(0); }

Rational Pmf::mean() const {
  Rational m(0);
  for (std::size_t k = 1; k < masses_.size(); ++k) m += masses_[k] * static_cast<unsigned long>(k);
  return m;
}

bool operator==(const Pmf& lhs, const Pmf& rhs) {
  std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.at(k) != rhs.at(k)) return false;
  }
  return true;
}

}  // namespace staircase
