#include "staircase/enumerate.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace staircase {

namespace {

WeightClassCounts empty_counts(int n) {
  return WeightClassCounts(static_cast<std::size_t>(n + 1),
                           std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
}

struct PowerTable {
  std::vector<Rational> a_pow;
  std::vector<Rational> b_pow;

  PowerTable(int n, const Weights& w) {
    for (int k = 0; k <= n; ++k) {
      a_pow.push_back(power(w.a(), static_cast<unsigned>(k)));
      b_pow.push_back(power(w.b(), static_cast<unsigned>(k)));
    }
  }
};

// Number of four-symbol tableaux per (N_alpha, N_beta, N_gamma, N_delta),
// computed once per size.
using FourClassCounts = std::map<std::array<int, 4>, std::uint64_t>;

std::shared_ptr<const FourClassCounts> four_class_counts(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FourClassCounts>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto classes = std::make_shared<FourClassCounts>();
  for_each_tableau(
      n,
      [&](const Tableau& t) {
        auto c = symbol_counts(t);
        ++(*classes)[{c.alpha, c.beta, c.gamma, c.delta}];
      },
      Alphabet::FourSymbol);
  return cache.emplace(n, classes).first->second;
}

}  // namespace

std::uint64_t count_tableaux(int n, Alphabet alphabet) {
  std::uint64_t count = 0;
  for_each_tableau(n, [&](const Tableau&) { ++count; }, alphabet);
  return count;
}

WeightClassCounts weight_class_counts(int n, const std::function<bool(const Tableau&)>& keep) {
  auto counts = empty_counts(n);
  for_each_tableau(n, [&](const Tableau& t) {
    if (keep && !keep(t)) return;
    auto c = symbol_counts(t);
    ++counts[static_cast<std::size_t>(c.alpha)][static_cast<std::size_t>(c.beta)];
  });
  return counts;
}

Rational normalized_weight(int n, const Weights& w, const WeightClassCounts& counts) {
  PowerTable pw(n, w);
  Rational total(0);
  for (int na = 0; na <= n; ++na) {
    for (int nb = 0; nb <= n; ++nb) {
      auto c = counts[static_cast<std::size_t>(na)][static_cast<std::size_t>(nb)];
      if (c == 0) continue;
      total += Rational(BigInt(static_cast<unsigned long>(c))) *
               pw.a_pow[static_cast<std::size_t>(n - na)] * pw.b_pow[static_cast<std::size_t>(n - nb)];
    }
  }
  return total;
}

Rational normalized_weight(const Tableau& t, const Weights& w) {
  auto c = symbol_counts(t);
  const int n = t.size();
  return power(w.a(), static_cast<unsigned>(n - c.alpha)) *
         power(w.b(), static_cast<unsigned>(n - c.beta));
}

Rational brute_partition(int n, const Rational& alpha, const Rational& beta) {
  auto counts = weight_class_counts(n);
  Rational total(0);
  for (int na = 0; na <= n; ++na) {
    for (int nb = 0; nb <= n; ++nb) {
      auto c = counts[static_cast<std::size_t>(na)][static_cast<std::size_t>(nb)];
      if (c == 0) continue;
      total += Rational(BigInt(static_cast<unsigned long>(c))) *
               power(alpha, static_cast<unsigned>(na)) * power(beta, static_cast<unsigned>(nb));
    }
  }
  return total;
}

Rational brute_partition(int n, const FourWeights& w) {
  w.check();
  check_enum_size(n, Alphabet::FourSymbol);
  const auto classes = four_class_counts(n);
  Rational total(0);
  for (const auto& [k, c] : *classes) {
    total += Rational(BigInt(static_cast<unsigned long>(c))) *
             power(w.alpha, static_cast<unsigned>(k[0])) * power(w.beta, static_cast<unsigned>(k[1])) *
             power(w.gamma, static_cast<unsigned>(k[2])) * power(w.delta, static_cast<unsigned>(k[3]));
  }
  return total;
}

Rational brute_normalized_partition(int n, const Weights& w) {
  return normalized_weight(n, w, weight_class_counts(n));
}

OracleMeasure::OracleMeasure(int n, const Weights& w)
    : n_(n), w_(w), total_(brute_normalized_partition(n, w)) {}

Rational OracleMeasure::prob(const Tableau& t) const {
  if (t.size() != n_) throw std::invalid_argument("tableau size does not match the measure");
  if (!t.is_alpha_beta() || !validate(t).empty()) return 0;
  return normalized_weight(t, w_) / total_;
}

Rational OracleMeasure::prob(const ConstraintSet& c) const {
  c.check_fits(n_);
  return prob([&](const Tableau& t) { return c.satisfied_by(t); });
}

Rational OracleMeasure::prob(const std::function<bool(const Tableau&)>& event) const {
  return normalized_weight(n_, w_, weight_class_counts(n_, event)) / total_;
}

Rational OracleMeasure::conditional(const std::function<bool(const Tableau&)>& event,
                                    const std::function<bool(const Tableau&)>& condition) const {
  Rational denom = prob(condition);
  if (denom == 0) throw std::domain_error("conditioning on an event of probability zero");
  return prob([&](const Tableau& t) { return condition(t) && event(t); }) / denom;
}

Pmf OracleMeasure::statistic_pmf(Statistic s) const {
  const int bound = statistic_support_bound(n_, s);
  std::vector<WeightClassCounts> by_value(static_cast<std::size_t>(bound + 1), empty_counts(n_));
  const auto boxes = statistic_boxes(n_, s);
  for_each_tableau(n_, [&](const Tableau& t) {
    int value = 0;
    for (Box b : boxes) value += statistic_counts(s, t.cell(b.row, b.col)) ? 1 : 0;
    if (value > bound) throw std::logic_error("statistic exceeds its structural bound");
    auto c = symbol_counts(t);
    ++by_value[static_cast<std::size_t>(value)][static_cast<std::size_t>(c.alpha)]
              [static_cast<std::size_t>(c.beta)];
  });
  std::vector<Rational> masses;
  for (const auto& counts : by_value) masses.push_back(normalized_weight(n_, w_, counts) / total_);
  while (masses.size() > 1 && masses.back() == 0) masses.pop_back();
  return Pmf(std::move(masses));
}

Rational oracle_event_prob(int n, const Weights& w, const ConstraintSet& c) {
  return OracleMeasure(n, w).prob(c);
}

Pmf oracle_statistic_pmf(int n, const Weights& w, Statistic s) {
  return OracleMeasure(n, w).statistic_pmf(s);
}

}  // namespace staircase
