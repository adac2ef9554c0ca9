#include "staircase/moments.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "staircase/dpcount.hpp"
#include "staircase/parallel.hpp"

namespace staircase {

namespace {

Rational r_factorial(int r) { return Rational(factorial(static_cast<unsigned>(r))); }

// prod_{k=1}^{r} (n+a+b-2r+2k-1)_2
Rational alpha_denominator(int n, const Weights& w, int r) {
  const Rational nab = Rational(n) + w.a() + w.b();
  Rational d(1);
  for (int k = 1; k <= r; ++k) d *= falling(nab - 2 * r + 2 * k - 1, 2);
  return d;
}

// prod_{k=1}^{r} (n+a+b-r+k-1)
Rational nonempty_denominator(int n, const Weights& w, int r) {
  const Rational nab = Rational(n) + w.a() + w.b();
  Rational d(1);
  for (int k = 1; k <= r; ++k) d *= nab - r + k - 1;
  return d;
}

// Factorial moments of a diagonal alpha/non-empty count from the product
// formulas, summed over gap-g tuples in 1..m.
FactorialMoments product_moments(int n, const Weights& w, EventKind kind, int R, int m, int gap) {
  std::vector<Rational> mu{Rational(1)};
  if (kind == EventKind::Alpha) {
    auto sums = gap_alpha_numerator_sums(R, m, gap, w.b());
    for (int r = 1; r <= R; ++r) {
      const Rational& s = sums[static_cast<std::size_t>(r)];
      mu.push_back(s == 0 ? Rational(0) : r_factorial(r) * s / alpha_denominator(n, w, r));
    }
  } else {
    for (int r = 1; r <= R; ++r) {
      BigInt count = gap_tuple_count(r, m, gap);
      mu.push_back(count == 0 ? Rational(0)
                              : r_factorial(r) * Rational(count) / nonempty_denominator(n, w, r));
    }
  }
  return FactorialMoments(std::move(mu));
}

}  // namespace

FactorialMoments::FactorialMoments(std::vector<Rational> mu) : mu_(std::move(mu)) {
  if (mu_.empty() || mu_[0] != 1) throw std::invalid_argument("factorial moments need mu_0 = 1");
  for (auto& m : mu_) m.canonicalize();
}

int second_diag_max_order(int n) { return n / 2 + 1; }

std::vector<Rational> gap_alpha_numerator_sums(int R, int m, int gap, const Rational& b) {
  if (R < 0 || m < 0 || gap < 1) throw std::invalid_argument("need R >= 0, m >= 0, gap >= 1");
  std::vector<Rational> sums(static_cast<std::size_t>(R + 1), Rational(0));
  sums[0] = 1;
  // prefix[j] = sum over tuples of the current length whose last index is
  // at most j; for length 0 every prefix is 1.
  std::vector<Rational> prefix(static_cast<std::size_t>(m + 1), Rational(1));
  std::vector<Rational> next(static_cast<std::size_t>(m + 1));
  for (int l = 1; l <= R; ++l) {
    next[0] = 0;
    for (int j = 1; j <= m; ++j) {
      Rational here(0);
      const int before = l == 1 ? 0 : j - gap;
      if (l == 1 || before >= 1) {
        here = (b + j - 2 * l + 1) * prefix[static_cast<std::size_t>(before)];
      }
      next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j - 1)] + here;
    }
    prefix.swap(next);
    sums[static_cast<std::size_t>(l)] = prefix[static_cast<std::size_t>(m)];
  }
  return sums;
}

FactorialMoments factorial_moments_second_diag(int n, const Weights& w, EventKind kind, int R) {
  if (n < 1) throw std::out_of_range("size must be positive");
  if (R < 0 || R > second_diag_max_order(n)) {
    throw std::out_of_range("moment order " + std::to_string(R) + " outside 0.." +
                            std::to_string(second_diag_max_order(n)) + " for size " +
                            std::to_string(n));
  }
  if (kind == EventKind::Beta) return factorial_moments_second_diag(n, w.swapped(), EventKind::Alpha, R);
  return product_moments(n, w, kind, R, n - 1, 2);
}

Statistic statistic_for(Diagonal d, EventKind kind) {
  if (d == Diagonal::Second) {
    return kind == EventKind::Alpha ? Statistic::A2 : kind == EventKind::Beta ? Statistic::B2 : Statistic::X2;
  }
  if (d == Diagonal::Third) {
    return kind == EventKind::Alpha ? Statistic::A3 : kind == EventKind::Beta ? Statistic::B3 : Statistic::X3;
  }
  throw std::invalid_argument("diagonal statistics are defined for the second and third diagonals");
}

FactorialMoments factorial_moments_third_diag(int n, const Weights& w, EventKind kind, int R,
                                              ThirdDiagMode mode) {
  if (n < 1) throw std::out_of_range("size must be positive");
  if (R < 0) throw std::out_of_range("moment order must be nonnegative");
  if (mode == ThirdDiagMode::ExactDp) {
    return factorial_moments_of(statistic_pmf_dp(n, w, statistic_for(Diagonal::Third, kind)), R);
  }
  if (kind == EventKind::Beta) throw std::invalid_argument("main terms cover alpha and non-empty events");
  return product_moments(n, w, kind, R, std::max(n - 2, 0), 3);
}

FactorialMoments third_diag_moments_by_tuples(int n, const Weights& w, EventKind kind, int R) {
  if (R < 0) throw std::out_of_range("moment order must be nonnegative");
  const int m = std::max(n - 2, 0);
  ScaledWeights sw(w);
  BigInt all = power(sw.d, static_cast<unsigned>(n));
  for (int k = 0; k < n; ++k) all *= sw.pa + sw.pb + BigInt(k) * sw.d;
  std::vector<Rational> mu{Rational(1)};
  for (int r = 1; r <= R; ++r) {
    BigInt hits = 0;
    for_each_gap_tuple(r, m, 1, [&](const std::vector<int>& t) {
      for (std::size_t x = 0; x < t.size(); ++x) {
        for (std::size_t y = x + 1; y < t.size(); ++y) {
          if (t[y] - t[x] == 2) return;
        }
      }
      hits += scaled_constrained_partition(n, sw, diagonal_event(n, Diagonal::Third, IndexTuple(t), kind));
    });
    mu.push_back(r_factorial(r) * Rational(hits, all));
  }
  return FactorialMoments(std::move(mu));
}

FactorialMoments factorial_moments_of(const Pmf& p, int R) {
  if (R < 0) throw std::out_of_range("moment order must be nonnegative");
  std::vector<Rational> mu{Rational(1)};
  for (int r = 1; r <= R; ++r) {
    Rational m(0);
    for (std::size_t k = static_cast<std::size_t>(r); k < p.size(); ++k) {
      m += Rational(falling(Rational(static_cast<long>(k)), r)) * p[k];
    }
    mu.push_back(m);
  }
  return FactorialMoments(std::move(mu));
}

Pmf pmf_from_factorial_moments(const FactorialMoments& m) {
  int R = m.max_order();
  while (R > 0 && m[R] == 0) --R;
  std::vector<Rational> masses;
  for (int k = 0; k <= R; ++k) {
    Rational p(0);
    for (int r = k; r <= R; ++r) {
      Rational term = m[r] / Rational(factorial(static_cast<unsigned>(k)) *
                                      factorial(static_cast<unsigned>(r - k)));
      if ((r - k) % 2 == 0) {
        p += term;
      } else {
        p -= term;
      }
    }
    if (p < 0) {
      throw std::domain_error("moment inversion gives negative mass " + to_string(p) + " at " +
                              std::to_string(k) + ": the moments are inconsistent");
    }
    masses.push_back(p);
  }
  while (masses.size() > 1 && masses.back() == 0) masses.pop_back();
  return Pmf(std::move(masses));
}

Pmf second_diag_pmf(int n, const Weights& w, EventKind kind) {
  const int bound = statistic_support_bound(n, statistic_for(Diagonal::Second, kind));
  FactorialMoments m = factorial_moments_second_diag(n, w, kind, bound + 1);
  if (m[bound + 1] != 0) {
    throw std::logic_error("factorial moment above the support bound is nonzero");
  }
  std::vector<Rational> head(m.values().begin(), m.values().end() - 1);
  return pmf_from_factorial_moments(FactorialMoments(std::move(head)));
}

Pmf exact_statistic_pmf(int n, const Weights& w, Statistic s) {
  switch (s) {
    case Statistic::A2: return second_diag_pmf(n, w, EventKind::Alpha);
    case Statistic::B2: return second_diag_pmf(n, w, EventKind::Beta);
    case Statistic::X2: return second_diag_pmf(n, w, EventKind::NonEmpty);
    default: return statistic_pmf_dp(n, w, s);
  }
}

Rational tv_distance(const Pmf& p, const Pmf& q) {
  Rational sum(0);
  const std::size_t k_max = std::max(p.size(), q.size());
  for (std::size_t k = 0; k < k_max; ++k) sum += abs(p.at(k) - q.at(k));
  return sum / 2;
}

Rational poisson_limit_for(Statistic s) {
  switch (s) {
    case Statistic::A2:
    case Statistic::B2:
    case Statistic::A3:
    case Statistic::B3: return Rational(1, 2);
    case Statistic::X2:
    case Statistic::X3: return Rational(1);
    case Statistic::NAlpha:
    case Statistic::NBeta: break;
  }
  throw std::invalid_argument("no Poisson limit is paired with statistic " + to_string(s));
}

ConvergenceReport convergence_report(const std::vector<int>& ns, const Weights& w, Statistic s,
                                     const Rational& lambda) {
  const Rational paired = poisson_limit_for(s);
  if (lambda != paired) {
    throw std::invalid_argument("statistic " + to_string(s) + " converges to Pois(" + to_string(paired) +
                                "), not Pois(" + to_string(lambda) + ")");
  }
  ConvergenceReport report{s, w.a(), w.b(), lambda, std::vector<ConvergenceRow>(ns.size())};
  parallel_chunks(0, ns.size(), 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      ConvergenceRow& row = report.rows[i];
      row.n = ns[i];
      Pmf law = exact_statistic_pmf(ns[i], w, s);
      auto mu = factorial_moments_of(law, 4);
      row.moments.assign(mu.values().begin() + 1, mu.values().end());
      row.tv = tv_to_poisson(law, lambda);
    }
  });
  return report;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "n,r1,r2,r3,r4,tv\n";
  for (const auto& row : rows) {
    out << row.n;
    for (const auto& m : row.moments) out << ',' << to_string(m);
    out << ',' << row.tv.decimal << '\n';
  }
  return out.str();
}

std::string ConvergenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["statistic"] = to_string(statistic);
  j["a"] = to_string(a);
  j["b"] = to_string(b);
  j["lambda"] = to_string(lambda);
  j["tv_significant_digits"] = 20;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    auto moments = nlohmann::ordered_json::array();
    for (const auto& m : row.moments) moments.push_back(to_string(m));
    r["factorial_moments"] = moments;
    r["tv"] = row.tv.decimal;
    std::ostringstream tail;
    tail.precision(6);
    tail << row.tv.tail_bound;
    r["poisson_tail_bound"] = tail.str();
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace staircase
