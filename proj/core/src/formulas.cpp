#include "staircase/formulas.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

Rational checked_ratio(const Rational& num, const Rational& den) {
  if (den == 0) throw std::domain_error("formula denominator vanishes");
  return num / den;
}

void check_diagonal_tuple(int n, const IndexTuple& t, int last) {
  if (t.r() == 0) return;
  if (t.j(1) < 1 || t.cols().back() > last) {
    throw std::out_of_range("index tuple " + to_string(t) + " must lie in 1.." + std::to_string(last) +
                            " for size " + std::to_string(n));
  }
}

// prod_{k=1}^{r} (b + j_{r-k+1} - 2r + 2k - 1) / (n+a+b-2r+2k-1)_2
Rational alpha_product(int n, const Weights& w, const IndexTuple& t) {
  const int r = t.r();
  const Rational nab = Rational(n) + w.a() + w.b();
  Rational p(1);
  for (int k = 1; k <= r; ++k) {
    Rational num = w.b() + t.j(r - k + 1) - 2 * r + 2 * k - 1;
    p *= checked_ratio(num, falling(nab - 2 * r + 2 * k - 1, 2));
  }
  return p;
}

// prod_{k=1}^{r} 1 / (n+a+b-r+k-1)
Rational nonempty_product(int n, const Weights& w, int r) {
  const Rational nab = Rational(n) + w.a() + w.b();
  Rational p(1);
  for (int k = 1; k <= r; ++k) p *= checked_ratio(1, nab - r + k - 1);
  return p;
}

void gap_tuples(int r, int m, int gap, std::vector<int>& cur, int next_min,
                const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == r) {
    visit(cur);
    return;
  }
  const int remaining = r - static_cast<int>(cur.size());
  // The last index must still fit: j + gap*(remaining-1) <= m.
  for (int j = next_min; j + gap * (remaining - 1) <= m; ++j) {
    cur.push_back(j);
    gap_tuples(r, m, gap, cur, j + gap, visit);
    cur.pop_back();
  }
}

}  // namespace

Rational rising(const Rational& x, int k) { return rising_falling(x, k, FactorialKind::Rising); }

Rational falling(const Rational& x, int k) { return rising_falling(x, k, FactorialKind::Falling); }

Rational rising_falling(const Rational& x, int k, FactorialKind kind) {
  if (k < 0) throw std::invalid_argument("factorial length must be nonnegative");
  Rational p(1);
  for (int i = 0; i < k; ++i) p *= kind == FactorialKind::Rising ? Rational(x + i) : Rational(x - i);
  return p;
}

Rational partition_closed(int n, const FourWeights& w) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  w.check();
  const Rational sum = w.alpha + w.beta + w.gamma + w.delta;
  const Rational prod = (w.alpha + w.gamma) * (w.beta + w.delta);
  Rational z(1);
  for (int i = 0; i < n; ++i) z *= sum + i * prod;
  return z;
}

Rational partition_closed(int n, const Rational& alpha, const Rational& beta) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  Weights w = Weights::from_alpha_beta(alpha, beta);
  return power(alpha, static_cast<unsigned>(n)) * power(beta, static_cast<unsigned>(n)) *
         rising(w.a() + w.b(), n);
}

Rational normalized_partition_closed(int n, const Weights& w) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  return rising(w.a() + w.b(), n);
}

BoxLaw box_law(int n, const Weights& w, Box box) {
  const int i = box.row;
  const int j = box.col;
  if (n < 1 || i < 1 || j < 1 || i + j > n + 1) {
    throw std::out_of_range("box (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is outside a size-" + std::to_string(n) + " staircase");
  }
  BoxLaw law;
  if (i + j == n + 1) {
    const Rational den = Rational(n) + w.a() + w.b() - 1;
    law.alpha = checked_ratio(Rational(n - i) + w.b(), den);
    law.beta = checked_ratio(w.a() + i - 1, den);
    law.empty = 0;
  } else {
    const Rational den = falling(Rational(i + j - 1) + w.a() + w.b(), 2);
    law.alpha = checked_ratio(Rational(j - 1) + w.b(), den);
    law.beta = checked_ratio(Rational(i - 1) + w.a(), den);
    law.empty = 1 - law.alpha - law.beta;
  }
  return law;
}

IndexTuple::IndexTuple(std::vector<int> cols) : cols_(std::move(cols)) {
  for (std::size_t k = 0; k < cols_.size(); ++k) {
    if (cols_[k] < 1) throw std::invalid_argument("indices must be positive");
    if (k > 0 && cols_[k] <= cols_[k - 1]) {
      throw std::invalid_argument("indices must be strictly increasing");
    }
  }
}

IndexTuple::IndexTuple(std::vector<int> cols, GapClass required) : IndexTuple(std::move(cols)) {
  if (!satisfies(required)) {
    throw std::invalid_argument("tuple " + to_string(*this) + " violates the gap-" +
                                std::to_string(static_cast<int>(required)) + " condition");
  }
}

int IndexTuple::min_gap() const {
  int g = INT_MAX;
  for (std::size_t k = 1; k < cols_.size(); ++k) g = std::min(g, cols_[k] - cols_[k - 1]);
  return g;
}

GapClass IndexTuple::gap_class() const {
  const int g = min_gap();
  if (g >= 3) return GapClass::Gap3;
  if (g >= 2) return GapClass::Gap2;
  return GapClass::Free;
}

IndexTuple parse_index_tuple(std::string_view text) {
  std::vector<int> cols;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw std::invalid_argument("malformed index list '" + std::string(text) +
                                  "': expected comma-separated integers like 1,3,5");
    }
    cols.push_back(value);
  }
  if (cols.empty()) throw std::invalid_argument("index list is empty");
  return IndexTuple(std::move(cols));
}

std::string to_string(const IndexTuple& t) {
  std::string s = "(";
  for (int k = 1; k <= t.r(); ++k) s += (k > 1 ? "," : "") + std::to_string(t.j(k));
  return s + ")";
}

Box diagonal_box(int n, Diagonal k, int j) { return {n - static_cast<int>(k) - j + 2, j}; }

ConstraintSet diagonal_event(int n, Diagonal k, const IndexTuple& t, EventKind kind) {
  ConstraintSet c;
  const Requirement req = kind == EventKind::Alpha  ? Requirement::MustAlpha
                          : kind == EventKind::Beta ? Requirement::MustBeta
                                                    : Requirement::MustNonEmpty;
  for (int j : t.cols()) c.require(diagonal_box(n, k, j), req);
  c.check_fits(n);
  return c;
}

std::string to_string(ZeroReason reason) {
  switch (reason) {
    case ZeroReason::None: return "none";
    case ZeroReason::GapViolation: return "gap-violation";
  }
  return "?";
}

FormulaValue second_diag_joint_alpha(int n, const Weights& w, const IndexTuple& t) {
  check_diagonal_tuple(n, t, n - 1);
  if (!t.satisfies(GapClass::Gap2)) return {Rational(0), ZeroReason::GapViolation, false};
  return {alpha_product(n, w, t), ZeroReason::None, false};
}

FormulaValue second_diag_joint_beta(int n, const Weights& w, const IndexTuple& t) {
  check_diagonal_tuple(n, t, n - 1);
  std::vector<int> mirrored;
  for (int k = t.r(); k >= 1; --k) mirrored.push_back(n - t.j(k));
  return second_diag_joint_alpha(n, w.swapped(), IndexTuple(std::move(mirrored)));
}

FormulaValue second_diag_joint_nonempty(int n, const Weights& w, const IndexTuple& t) {
  check_diagonal_tuple(n, t, n - 1);
  if (!t.satisfies(GapClass::Gap2)) return {Rational(0), ZeroReason::GapViolation, false};
  return {nonempty_product(n, w, t.r()), ZeroReason::None, false};
}

FormulaValue third_diag_main_term(int n, const Weights& w, const IndexTuple& t, EventKind kind) {
  if (kind == EventKind::Beta) throw std::invalid_argument("main terms cover alpha and non-empty events");
  check_diagonal_tuple(n, t, n - 2);
  if (!t.satisfies(GapClass::Gap3)) return {Rational(0), ZeroReason::GapViolation, true};
  Rational v = kind == EventKind::Alpha ? alpha_product(n, w, t) : nonempty_product(n, w, t.r());
  return {v, ZeroReason::None, false};
}

BigInt gap_tuple_count(int r, int m, int gap) {
  if (r < 0 || m < 0 || gap < 1) throw std::invalid_argument("need r >= 0, m >= 0, gap >= 1");
  if (r == 0) return 1;
  return binomial(m - static_cast<long>(gap - 1) * (r - 1), r);
}

void for_each_gap_tuple(int r, int m, int gap, const std::function<void(const std::vector<int>&)>& visit) {
  if (r < 0 || m < 0 || gap < 1) throw std::invalid_argument("need r >= 0, m >= 0, gap >= 1");
  std::vector<int> cur;
  gap_tuples(r, m, gap, cur, 1, visit);
}

std::vector<IndexTuple> gap_index_sets(int r, int m) {
  std::vector<IndexTuple> out;
  for_each_gap_tuple(r, m, 2, [&](const std::vector<int>& t) { out.emplace_back(t); });
  return out;
}

LemmaSides lemma_la_sum(int r, int m) {
  if (r < 1) throw std::invalid_argument("gap-tuple sum needs r >= 1");
  if (m < 0) throw std::invalid_argument("gap-tuple sum needs m >= 0");
  BigInt lhs = 0;
  for_each_gap_tuple(r, m, 2, [&](const std::vector<int>& t) {
    BigInt p = 1;
    for (int j : t) p *= j;
    lhs += p;
  });
  Rational rhs = falling(Rational(m + 1), 2 * r) /
                 Rational(power(BigInt(2), static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(r)));
  return {Rational(lhs), rhs};
}

}  // namespace staircase
