#include "staircase/dpcount.hpp"

#include <stdexcept>
#include <string>

#include "staircase/parallel.hpp"

namespace staircase {

namespace {

// Minimum number of pair updates per worker before a row is split.
constexpr std::size_t kParallelGrain = std::size_t{1} << 14;

void check_dp_size(int n) {
  if (n < 1 || n > kMaxDpSize) {
    throw std::out_of_range("counting engine supports sizes 1.." + std::to_string(kMaxDpSize) +
                            ", got " + std::to_string(n));
  }
}

// What may be placed in one box, and whether a placement raises the
// degree of the marker variable.
struct BoxRule {
  bool empty = true;
  bool alpha = true;
  bool beta = true;
  int shift_alpha = 0;
  int shift_beta = 0;
};

// rules[col][row], 1-based.
using RuleTable = std::vector<std::vector<BoxRule>>;

RuleTable make_rules(int n, const ConstraintSet* c, const std::vector<Box>* marked,
                     Statistic s = Statistic::X2) {
  RuleTable rules(static_cast<std::size_t>(n + 1));
  for (int col = 1; col <= n; ++col) {
    const int h = n + 1 - col;
    rules[static_cast<std::size_t>(col)].resize(static_cast<std::size_t>(h + 1));
    for (int row = 1; row <= h; ++row) {
      BoxRule& r = rules[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
      const Box box{row, col};
      r.empty = row != h && (c == nullptr || c->allows(box, Cell::Empty));
      r.alpha = c == nullptr || c->allows(box, Cell::Alpha);
      r.beta = c == nullptr || c->allows(box, Cell::Beta);
    }
  }
  if (marked != nullptr) {
    for (Box b : *marked) {
      BoxRule& r = rules[static_cast<std::size_t>(b.col)][static_cast<std::size_t>(b.row)];
      r.shift_alpha = statistic_counts(s, Cell::Alpha) ? 1 : 0;
      r.shift_beta = statistic_counts(s, Cell::Beta) ? 1 : 0;
    }
  }
  return rules;
}

inline void addmul(BigInt& acc, const BigInt& c, const BigInt& x) {
  if (sgn(x) == 0) return;
  if (c == 1) {
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
  } else {
    mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  }
}
inline void addmul(double& acc, double c, double x) { acc += c * x; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Inserts a zero bit at position pos into idx.
inline std::uint64_t spread(std::uint64_t idx, int pos) {
  const std::uint64_t low = idx & ((std::uint64_t{1} << pos) - 1);
  return ((idx >> pos) << (pos + 1)) | low;
}

// Forward column sweep. The state vector holds, for each (dirty mask, flag)
// pair, `width` coefficients of a polynomial in the marker variable.
// Placement factors (all integers):
//   alpha in a clean row: d * pb (column has alpha, row has no beta)
//   alpha in a dirty row: d
//   beta as the column's first symbol: d * pa (row has beta, column no alpha)
//   beta below another symbol: d
// so every valid tableau contributes d^(2n) a^(n-N_alpha) b^(n-N_beta).
template <class Num>
std::vector<Num> forward_sweep(int n, const Num& coef_alpha_clean, const Num& coef_beta_top,
                               const Num& coef_d, std::size_t width, const RuleTable& rules,
                               DpStats* stats) {
  std::vector<Num> v((std::size_t{2} << n) * width);
  v[0] = 1;
  std::uint64_t pair_updates = 0;
  std::uint64_t boundary_states = 0;
  const auto slot = [width](std::uint64_t mask, int flag) {
    return static_cast<std::size_t>((mask << 1) | static_cast<std::uint64_t>(flag)) * width;
  };

  for (int col = 1; col <= n; ++col) {
    const int h = n + 1 - col;
    for (int k = 1; k <= h; ++k) {
      const BoxRule& r = rules[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
      const int pos = k - 1;
      const std::uint64_t bit = std::uint64_t{1} << pos;
      // Column 1 starts from the empty mask, so before row k only rows
      // 1..k-1 can be dirty.
      const std::uint64_t pairs = col == 1 ? bit : (std::uint64_t{1} << (h - 1));
      pair_updates += pairs;
      parallel_chunks(0, static_cast<std::size_t>(pairs), kParallelGrain,
                      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
          const std::uint64_t m0 = col == 1 ? idx : spread(idx, pos);
          const std::uint64_t m1 = m0 | bit;
          Num* p00 = &v[slot(m0, 0)];
          Num* p01 = &v[slot(m0, 1)];
          Num* p10 = &v[slot(m1, 0)];
          Num* p11 = &v[slot(m1, 1)];
          for (std::size_t t = 0; t < width; ++t) {
            Num& out = p11[t];
            if (!r.empty) out = 0;
            if (r.alpha && t >= static_cast<std::size_t>(r.shift_alpha)) {
              const std::size_t s = t - static_cast<std::size_t>(r.shift_alpha);
              addmul(out, coef_alpha_clean, p00[s]);
              addmul(out, coef_d, p10[s]);
            }
            if (r.beta && t >= static_cast<std::size_t>(r.shift_beta)) {
              const std::size_t s = t - static_cast<std::size_t>(r.shift_beta);
              addmul(out, coef_beta_top, p00[s]);
              addmul(out, coef_d, p01[s]);
            }
          }
          if (!r.empty) {
            for (std::size_t t = 0; t < width; ++t) {
              p00[t] = 0;
              p01[t] = 0;
              p10[t] = 0;
            }
          }
        }
      });
    }
    // The diagonal row h leaves scope. Only states whose diagonal box is
    // filled survive (bit h set, flag set); every other entry is zero.
    const std::uint64_t top = std::uint64_t{1} << (h - 1);
    for (std::uint64_t m = 0; m < top; ++m) {
      Num* dst = &v[slot(m, 0)];
      Num* src = &v[slot(m | top, 1)];
      bool nonzero = false;
      for (std::size_t t = 0; t < width; ++t) {
        std::swap(dst[t], src[t]);
        nonzero = nonzero || !is_zero(dst[t]);
      }
      if (nonzero) ++boundary_states;
    }
  }
  if (stats != nullptr) {
    stats->boundary_states = boundary_states;
    stats->pair_updates = pair_updates;
  }
  v.resize(width);
  return v;
}

BigInt power_of(const BigInt& base, int exponent) { return power(base, static_cast<unsigned>(exponent)); }

}  // namespace

BigInt scaled_constrained_partition(int n, const ScaledWeights& w, const ConstraintSet& c,
                                    DpStats* stats) {
  check_dp_size(n);
  c.check_fits(n);
  const RuleTable rules = make_rules(n, &c, nullptr);
  BigInt coef_alpha_clean = w.d * w.pb;
  BigInt coef_beta_top = w.d * w.pa;
  auto v = forward_sweep<BigInt>(n, coef_alpha_clean, coef_beta_top, w.d, 1, rules, stats);
  return v[0];
}

Rational constrained_partition(int n, const Weights& w, const ConstraintSet& c, DpStats* stats) {
  ScaledWeights sw(w);
  Rational result(scaled_constrained_partition(n, sw, c, stats), power_of(sw.d, 2 * n));
  result.canonicalize();
  return result;
}

double constrained_partition_approx(int n, double a, double b, const ConstraintSet& c) {
  check_dp_size(n);
  c.check_fits(n);
  if (!(a >= 0) || !(b >= 0) || a + b <= 0) throw std::invalid_argument("need a, b >= 0 and a + b > 0");
  const RuleTable rules = make_rules(n, &c, nullptr);
  // Unscaled form: d = 1, pa = a, pb = b.
  auto v = forward_sweep<double>(n, b, a, 1.0, 1, rules, nullptr);
  return v[0];
}

Rational event_prob(int n, const Weights& w, const ConstraintSet& c) {
  ScaledWeights sw(w);
  BigInt hit = scaled_constrained_partition(n, sw, c);
  // The unconstrained sum is d^n (pa+pb)(pa+pb+d)...(pa+pb+(n-1)d); the
  // sweep reproduces it exactly (checked by the normalization tests).
  BigInt all = power_of(sw.d, n);
  for (int k = 0; k < n; ++k) all *= sw.pa + sw.pb + BigInt(k) * sw.d;
  Rational p(hit, all);
  p.canonicalize();
  return p;
}

Pmf statistic_pmf_dp(int n, const Weights& w, Statistic s, DpStats* stats) {
  check_dp_size(n);
  ScaledWeights sw(w);
  const auto boxes = statistic_boxes(n, s);
  const RuleTable rules = make_rules(n, nullptr, &boxes, s);
  const auto width = static_cast<std::size_t>(statistic_support_bound(n, s) + 1);
  BigInt coef_alpha_clean = sw.d * sw.pb;
  BigInt coef_beta_top = sw.d * sw.pa;
  auto v = forward_sweep<BigInt>(n, coef_alpha_clean, coef_beta_top, sw.d, width, rules, stats);
  BigInt total = 0;
  for (const auto& x : v) total += x;
  std::vector<Rational> masses;
  for (const auto& x : v) {
    Rational m(x, total);
    m.canonicalize();
    masses.push_back(m);
  }
  while (masses.size() > 1 && masses.back() == 0) masses.pop_back();
  return Pmf(std::move(masses));
}

std::vector<Box> sweep_order(int n) {
  std::vector<Box> order;
  for (int col = 1; col <= n; ++col) {
    for (int row = 1; row <= n + 1 - col; ++row) order.push_back({row, col});
  }
  return order;
}

const Rational& CellLaw::of(Cell c) const {
  switch (c) {
    case Cell::Empty: return empty;
    case Cell::Alpha: return alpha;
    case Cell::Beta: return beta;
    default: break;
  }
  throw std::invalid_argument("cell law covers only empty, alpha and beta");
}

ChainRuleModel::ChainRuleModel(int n, const Weights& w) : n_(n), w_(w), sw_(w) {
  check_dp_size(n);
  coef_alpha_clean_ = sw_.d * sw_.pb;
  coef_beta_top_ = sw_.d * sw_.pa;
  const BigInt coef_first = coef_alpha_clean_ + coef_beta_top_;
  boundary_.resize(static_cast<std::size_t>(n + 2));
  boundary_[static_cast<std::size_t>(n + 1)] = {BigInt(1)};
  // Backward sweep, one column at a time: V[(mask, flag)] is the weight of
  // completing the sweep from the current row on.
  for (int col = n; col >= 1; --col) {
    const int h = n + 1 - col;
    const std::uint64_t top = std::uint64_t{1} << (h - 1);
    const std::uint64_t masks = std::uint64_t{1} << h;
    std::vector<BigInt> v(static_cast<std::size_t>(masks * 2));
    const auto& next = boundary_[static_cast<std::size_t>(col + 1)];
    for (std::uint64_t m = top; m < masks; ++m) v[static_cast<std::size_t>((m << 1) | 1)] = next[static_cast<std::size_t>(m ^ top)];
    for (int k = h; k >= 1; --k) {
      const bool empty_ok = k != h;
      const int pos = k - 1;
      const std::uint64_t bit = std::uint64_t{1} << pos;
      for (std::uint64_t idx = 0; idx < (masks >> 1); ++idx) {
        const std::uint64_t m0 = spread(idx, pos);
        const std::uint64_t m1 = m0 | bit;
        BigInt& v00 = v[static_cast<std::size_t>(m0 << 1)];
        BigInt& v01 = v[static_cast<std::size_t>((m0 << 1) | 1)];
        BigInt& v10 = v[static_cast<std::size_t>(m1 << 1)];
        BigInt& v11 = v[static_cast<std::size_t>((m1 << 1) | 1)];
        if (!empty_ok) {
          v00 = 0;
          v01 = 0;
          v10 = 0;
        }
        addmul(v00, coef_first, v11);
        addmul(v01, sw_.d, v11);
        addmul(v10, sw_.d, v11);
        if (!empty_ok) v11 = 0;
      }
    }
    auto& table = boundary_[static_cast<std::size_t>(col)];
    table.resize(static_cast<std::size_t>(masks));
    for (std::uint64_t m = 0; m < masks; ++m) table[static_cast<std::size_t>(m)].swap(v[static_cast<std::size_t>(m << 1)]);
  }
  total_ = boundary_[1][0];
}

bool ChainRuleModel::advance(Cursor& cur, Cell c) const {
  const int h = n_ + 1 - cur.col;
  const std::uint32_t bit = 1U << (cur.row - 1);
  const bool clean = (cur.mask & bit) == 0;
  switch (c) {
    case Cell::Empty:
      if (cur.row == h) return false;
      break;
    case Cell::Alpha:
      if (cur.above) return false;
      cur.mask |= bit;
      cur.above = true;
      break;
    case Cell::Beta:
      if (!clean) return false;
      cur.mask |= bit;
      cur.above = true;
      break;
    default: return false;
  }
  if (cur.row == h) {
    cur.mask &= ~bit;
    cur.col += 1;
    cur.row = 1;
    cur.above = false;
  } else {
    cur.row += 1;
  }
  return true;
}

ChainRuleModel::Choice ChainRuleModel::choice_at(const Cursor& cur) const {
  Choice out;
  const std::uint32_t bit = 1U << (cur.row - 1);
  const bool clean = (cur.mask & bit) == 0;
  Cursor next = cur;
  if (advance(next, Cell::Empty)) out.empty = continuation(next);
  next = cur;
  if (advance(next, Cell::Alpha)) out.alpha = (clean ? coef_alpha_clean_ : sw_.d) * continuation(next);
  next = cur;
  if (advance(next, Cell::Beta)) out.beta = (cur.above ? sw_.d : coef_beta_top_) * continuation(next);
  return out;
}

BigInt ChainRuleModel::continuation(const Cursor& cur) const {
  if (cur.col > n_) return 1;
  if (cur.row == 1 && !cur.above) return boundary_[static_cast<std::size_t>(cur.col)][cur.mask];
  const std::uint64_t key = (static_cast<std::uint64_t>(cur.col) << 28) |
                            (static_cast<std::uint64_t>(cur.row) << 23) |
                            (static_cast<std::uint64_t>(cur.above) << 22) | cur.mask;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  BigInt value = continuation_uncached(cur);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  // Bound memory for long sampling runs at large n.
  if (memo_.size() > (std::size_t{1} << 22)) memo_.clear();
  memo_.emplace(key, value);
  return value;
}

BigInt ChainRuleModel::continuation_uncached(const Cursor& cur) const {
  Choice c = choice_at(cur);
  return c.empty + c.alpha + c.beta;
}

ChainRuleModel::Choice ChainRuleModel::next_choice(const std::vector<Cell>& prefix) const {
  Cursor cur;
  for (Cell c : prefix) {
    if (cur.col > n_) throw std::invalid_argument("prefix is longer than the tableau");
    if (!advance(cur, c)) throw std::invalid_argument("prefix violates the tableau rules");
  }
  if (cur.col > n_) throw std::invalid_argument("prefix already fills the tableau");
  Choice out = choice_at(cur);
  if (sgn(out.empty + out.alpha + out.beta) == 0) {
    throw std::invalid_argument("prefix has no valid completion");
  }
  return out;
}

CellLaw ChainRuleModel::conditional_cell_law(const std::vector<Cell>& prefix) const {
  Choice c = next_choice(prefix);
  BigInt sum = c.empty + c.alpha + c.beta;
  CellLaw law{Rational(c.empty, sum), Rational(c.alpha, sum), Rational(c.beta, sum)};
  law.empty.canonicalize();
  law.alpha.canonicalize();
  law.beta.canonicalize();
  return law;
}

Rational ChainRuleModel::path_probability(const Tableau& t) const {
  if (t.size() != n_) throw std::invalid_argument("tableau size does not match the model");
  Rational p(1);
  Cursor cur;
  for (Box b : sweep_order(n_)) {
    const Cell c = t.cell(b.row, b.col);
    if (c == Cell::Gamma || c == Cell::Delta) return 0;
    Choice choice = choice_at(cur);
    const BigInt& hit = c == Cell::Empty ? choice.empty : c == Cell::Alpha ? choice.alpha : choice.beta;
    if (sgn(hit) == 0) return 0;
    p *= Rational(hit, choice.empty + choice.alpha + choice.beta);
    if (!advance(cur, c)) return 0;
  }
  p.canonicalize();
  return p;
}

Tableau ChainRuleModel::draw(const std::function<BigInt(const BigInt&)>& uniform_below) const {
  Tableau t(n_);
  Cursor cur;
  for (Box b : sweep_order(n_)) {
    Choice choice = choice_at(cur);
    const BigInt u = uniform_below(choice.empty + choice.alpha + choice.beta);
    Cell c = Cell::Beta;
    if (u < choice.empty) {
      c = Cell::Empty;
    } else if (u < choice.empty + choice.alpha) {
      c = Cell::Alpha;
    }
    t.put(b.row, b.col, c);
    if (!advance(cur, c)) throw std::logic_error("sampled an illegal placement");
  }
  return t;
}

}  // namespace staircase
