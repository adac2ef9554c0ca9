// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 7        run the listed criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "staircase/asep.hpp"
#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/formulas.hpp"
#include "staircase/moments.hpp"
#include "staircase/sampler.hpp"

namespace staircase {
namespace {

// Collects up to kShownFailures failure messages; the rest are counted.
constexpr int kShownFailures = 4;

struct Outcome {
  bool pass = true;
  int failures = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    ++failures;
    if (failures <= kShownFailures) {
      detail += (failures > 1 ? " | " : "") + why;
    } else if (failures == kShownFailures + 1) {
      detail += " | ...";
    }
  }
  void note(const std::string& text) {
    if (pass) detail = text;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string where(int n, const Weights& w) {
  return "n=" + std::to_string(n) + " a=" + to_string(w.a()) + " b=" + to_string(w.b());
}

WeightClassCounts zero_counts(int n) {
  return WeightClassCounts(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
}

void bump(WeightClassCounts& c, const SymbolCounts& s) {
  ++c[static_cast<std::size_t>(s.alpha)][static_cast<std::size_t>(s.beta)];
}

Rational random_rational(std::mt19937_64& rng, int lo_num, int hi_num, int max_den) {
  std::uniform_int_distribution<int> num(lo_num, hi_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Partition identities.
Outcome partition_identities() {
  Outcome out;
  std::mt19937_64 rng(20240501);
  int tuples = 0;
  for (int k = 0; k < 24; ++k) {
    FourWeights fw{random_rational(rng, 0, 9, 7), random_rational(rng, 0, 9, 7), random_rational(rng, 0, 9, 7),
                   random_rational(rng, 0, 9, 7)};
    if (fw.alpha + fw.gamma == 0 || fw.beta + fw.delta == 0) continue;
    ++tuples;
    const Rational alpha = random_rational(rng, 1, 9, 7);
    const Rational beta = random_rational(rng, 1, 9, 7);
    for (int n = 1; n <= 6; ++n) {
      if (brute_partition(n, fw) != partition_closed(n, fw)) {
        out.fail("four-parameter partition differs at n=" + std::to_string(n));
      }
      if (brute_partition(n, alpha, beta) != partition_closed(n, alpha, beta)) {
        out.fail("alpha/beta partition differs at n=" + std::to_string(n));
      }
    }
  }
  if (tuples < 20) out.fail("only " + std::to_string(tuples) + " valid random tuples");
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t count = count_tableaux(n);
    if (BigInt(static_cast<unsigned long>(count)) != factorial(static_cast<unsigned>(n + 1))) {
      out.fail("count at n=" + std::to_string(n) + " is " + std::to_string(count));
    }
  }
  out.note(std::to_string(tuples) + " random tuples x n=1..6 exact; counts (n+1)! for n<=8");
  return out;
}

// 2. Box laws against the enumeration oracle.
Outcome box_laws() {
  Outcome out;
  std::uint64_t compared = 0;
  const auto grid = testkit::small_weight_grid();
  for (int n = 1; n <= 7; ++n) {
    const auto boxes = sweep_order(n);
    WeightClassCounts all = zero_counts(n);
    std::vector<std::array<WeightClassCounts, 3>> per_box(boxes.size(), {zero_counts(n), zero_counts(n), zero_counts(n)});
    for_each_tableau(n, [&](const Tableau& t) {
      const SymbolCounts s = symbol_counts(t);
      bump(all, s);
      for (std::size_t i = 0; i < boxes.size(); ++i) {
        bump(per_box[i][static_cast<std::size_t>(t.cell(boxes[i].row, boxes[i].col))], s);
      }
    });
    for (const auto& w : grid) {
      const Rational z = normalized_weight(n, w, all);
      for (std::size_t i = 0; i < boxes.size(); ++i) {
        const BoxLaw law = box_law(n, w, boxes[i]);
        const Rational p_empty = normalized_weight(n, w, per_box[i][0]) / z;
        const Rational p_alpha = normalized_weight(n, w, per_box[i][1]) / z;
        const Rational p_beta = normalized_weight(n, w, per_box[i][2]) / z;
        compared += 3;
        if (law.alpha != p_alpha || law.beta != p_beta || law.empty != p_empty) {
          out.fail("box (" + std::to_string(boxes[i].row) + "," + std::to_string(boxes[i].col) + ") " + where(n, w));
        }
      }
    }
  }
  out.note(std::to_string(compared) + " box probabilities equal the oracle");
  return out;
}

// 3. Joint second-diagonal laws, including structural zeros.
Outcome second_diagonal_joint() {
  Outcome out;
  std::uint64_t compared = 0;
  std::uint64_t zeros = 0;
  const auto grid = testkit::small_weight_grid();
  const EventKind kinds[] = {EventKind::Alpha, EventKind::Beta, EventKind::NonEmpty};
  for (int n = 2; n <= 7; ++n) {
    const int m = n - 1;
    std::vector<IndexTuple> tuples;
    for (int r = 1; r <= 3; ++r) {
      for_each_gap_tuple(r, m, 1, [&](const std::vector<int>& c) { tuples.emplace_back(c); });
    }
    WeightClassCounts all = zero_counts(n);
    std::vector<std::array<WeightClassCounts, 3>> hits(tuples.size(), {zero_counts(n), zero_counts(n), zero_counts(n)});
    for_each_tableau(n, [&](const Tableau& t) {
      const SymbolCounts s = symbol_counts(t);
      bump(all, s);
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        bool alpha = true, beta = true, nonempty = true;
        for (int j : tuples[i].cols()) {
          const Cell c = t.cell(n - j, j);
          alpha = alpha && c == Cell::Alpha;
          beta = beta && c == Cell::Beta;
          nonempty = nonempty && c != Cell::Empty;
        }
        if (alpha) bump(hits[i][0], s);
        if (beta) bump(hits[i][1], s);
        if (nonempty) bump(hits[i][2], s);
      }
    });
    for (const auto& w : grid) {
      const Rational z = normalized_weight(n, w, all);
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        const IndexTuple& t = tuples[i];
        for (std::size_t k = 0; k < 3; ++k) {
          const FormulaValue f = kinds[k] == EventKind::Alpha  ? second_diag_joint_alpha(n, w, t)
                                 : kinds[k] == EventKind::Beta ? second_diag_joint_beta(n, w, t)
                                                               : second_diag_joint_nonempty(n, w, t);
          const Rational oracle = normalized_weight(n, w, hits[i][k]) / z;
          ++compared;
          const bool gap_ok = t.satisfies(GapClass::Gap2);
          const ZeroReason want_reason = gap_ok ? ZeroReason::None : ZeroReason::GapViolation;
          if (!gap_ok) ++zeros;
          if (f.value != oracle || f.reason != want_reason) {
            out.fail("tuple " + to_string(t) + " " + where(n, w) + ": formula " + to_string(f.value) + " [" +
                     to_string(f.reason) + "], oracle " + to_string(oracle));
          }
        }
      }
    }
  }
  out.note(std::to_string(compared) + " joint probabilities exact, " + std::to_string(zeros) +
           " structural zeros with reason gap-violation");
  return out;
}

// 4. Gap-set identities.
Outcome gap_sets() {
  Outcome out;
  for (int r = 1; r <= 4; ++r) {
    for (int m = 0; m <= 30; ++m) {
      const LemmaSides s = lemma_la_sum(r, m);
      if (s.lhs != s.rhs) out.fail("sum identity r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
  }
  for (int r = 0; r <= 6; ++r) {
    for (int m = 0; m <= 40; ++m) {
      std::uint64_t listed = 0;
      for_each_gap_tuple(r, m, 2, [&](const std::vector<int>&) { ++listed; });
      const BigInt expected = binomial(m - r + 1, r);
      if (gap_tuple_count(r, m) != expected || BigInt(static_cast<unsigned long>(listed)) != expected) {
        out.fail("|J| r=" + std::to_string(r) + " m=" + std::to_string(m));
      }
    }
  }
  out.note("sum identity for r<=4, m<=30; |J_{r,m}| = binomial(m-r+1, r) for r<=6, m<=40");
  return out;
}

// 5. Structural lemmas.
Outcome structural_lemmas() {
  Outcome out;
  const auto grid = testkit::small_weight_grid();
  std::uint64_t compared = 0;
  for (const auto& w : grid) {
    for (int n = 1; n <= 6; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; i + j <= n + 1; ++j) {
          const auto r = testkit::subtableau_law(n, w, i, j);
          compared += r.compared;
          if (!r.ok) out.fail(r.detail);
        }
      }
      if (n >= 3) {
        const auto r = testkit::alpha_corner_law(n, w);
        compared += r.compared;
        if (!r.ok) out.fail(r.detail);
      }
      if (n >= 2) {
        const auto r = testkit::beta_corner_law(n, w);
        compared += r.compared;
        if (!r.ok) out.fail(r.detail);
      }
    }
  }
  // Switch identity, n <= 8, every non-empty set of third-diagonal columns
  // with j_1 >= 3, from one enumeration per size.
  std::uint64_t identities = 0;
  for (int n = 5; n <= 8; ++n) {
    const int first = 3;
    const int last = n - 2;
    const int width = last - first + 1;
    const std::size_t sets = std::size_t{1} << width;
    std::vector<std::array<WeightClassCounts, 2>> hits(sets, {zero_counts(n), zero_counts(n)});
    WeightClassCounts all = zero_counts(n);
    for_each_tableau(n, [&](const Tableau& t) {
      const SymbolCounts s = symbol_counts(t);
      bump(all, s);
      const bool lhs = t.cell(n - 1, 1) == Cell::Empty && t.cell(n, 1) == Cell::Beta;
      const bool rhs = t.cell(n - 1, 2) == Cell::Beta;
      if (!lhs && !rhs) return;
      std::size_t filled = 0;
      for (int j = first; j <= last; ++j) {
        if (t.cell(n - j - 1, j) != Cell::Empty) filled |= std::size_t{1} << (j - first);
      }
      // Every non-empty subset of the filled columns is satisfied.
      for (std::size_t sub = filled; sub != 0; sub = (sub - 1) & filled) {
        if (lhs) bump(hits[sub][0], s);
        if (rhs) bump(hits[sub][1], s);
      }
    });
    for (const auto& w : grid) {
      const Rational z = normalized_weight(n, w, all);
      for (std::size_t sub = 1; sub < sets; ++sub) {
        ++identities;
        const Rational l = normalized_weight(n, w, hits[sub][0]) / z;
        const Rational r = normalized_weight(n, w, hits[sub][1]) / z;
        if (l != r) out.fail("switch identity " + where(n, w) + " column set " + std::to_string(sub));
      }
    }
  }
  out.note(std::to_string(compared) + " conditional-law masses exact; " + std::to_string(identities) +
           " switch identities exact");
  return out;
}

// 6. Poisson convergence on the second diagonal.
Outcome second_diagonal_convergence() {
  Outcome out;
  const std::vector<int> ns = {8, 16, 32, 64, 128, 256};
  const Weights w(1, 1);
  const auto x_report = convergence_report(ns, w, Statistic::X2, Rational(1));
  const auto a_report = convergence_report(ns, w, Statistic::A2, Rational(1, 2));
  std::string summary;
  for (const auto* rep : {&x_report, &a_report}) {
    for (std::size_t i = 1; i < rep->rows.size(); ++i) {
      if (!(rep->rows[i].tv.value < rep->rows[i - 1].tv.value)) {
        out.fail("TV of " + to_string(rep->statistic) + " not decreasing at n=" + std::to_string(rep->rows[i].n));
      }
    }
    summary += to_string(rep->statistic) + " TV " + rep->rows.front().tv.decimal.substr(0, 8) + " -> " +
               rep->rows.back().tv.decimal.substr(0, 8) + "; ";
  }
  for (int r = 1; r <= 4; ++r) {
    const Rational limit(1, 1U << r);
    double lo = 0, hi = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      Rational d = a_report.rows[i].moments[static_cast<std::size_t>(r - 1)] - limit;
      if (d < 0) d = -d;
      const double c = to_double(d * ns[i]);
      lo = i == 0 ? c : std::min(lo, c);
      hi = i == 0 ? c : std::max(hi, c);
    }
    summary += "C_" + std::to_string(r) + " in [" + fixed(lo) + "," + fixed(hi) + "] ";
    if (!(lo > 0 && hi <= 2 * lo)) {
      out.fail("C_" + std::to_string(r) + " = n|E(A_n)_" + std::to_string(r) + " - 2^-" + std::to_string(r) +
               "| ranges over [" + fixed(lo) + ", " + fixed(hi) + "], ratio " + fixed(hi / lo, 3) +
               " exceeds 2");
    }
  }
  const std::string dir = STAIRCASE_GOLDEN_DIR;
  if (x_report.to_csv() != read_file(dir + "/converge_X2_a1_b1.csv")) out.fail("X2 report differs from golden");
  if (a_report.to_csv() != read_file(dir + "/converge_A2_a1_b1.csv")) out.fail("A2 report differs from golden");
  out.note(summary);
  return out;
}

// Scaled sequences are called bounded when they never exceed twice their
// value at the first grid point: a remainder of only the next-lower order
// would grow like n and more than double between n = 8 and n = 18.
bool bounded(const std::vector<double>& v) {
  for (double x : v) {
    if (x > 2 * v.front()) return false;
  }
  return true;
}

// 7. Third diagonal.
Outcome third_diagonal() {
  Outcome out;
  const Weights w(1, 1);
  const std::vector<std::vector<int>> patterns = {{1}, {2}, {1, 4}, {2, 5}};
  std::string summary;
  for (EventKind kind : {EventKind::NonEmpty, EventKind::Alpha}) {
    for (const auto& cols : patterns) {
      const IndexTuple t(cols, GapClass::Gap3);
      std::vector<double> scaled;
      for (int n = 8; n <= 18; ++n) {
        const Rational exact = event_prob(n, w, diagonal_event(n, Diagonal::Third, t, kind));
        Rational d = exact - third_diag_main_term(n, w, t, kind).value;
        if (d < 0) d = -d;
        scaled.push_back(to_double(d * Rational(power(BigInt(n), static_cast<unsigned>(t.r() + 1)))));
      }
      if (!bounded(scaled)) {
        out.fail("n^(r+1)|P - main term| grows for " + std::string(kind == EventKind::Alpha ? "alpha " : "x ") +
                 to_string(t) + ": " + fixed(scaled.front()) + " -> " + fixed(scaled.back()));
      }
    }
  }
  std::vector<double> crowded;
  for (int n = 8; n <= 18; ++n) {
    Rational worst(0);
    for (int k = 1; k <= n - 2; ++k) {
      const Rational p = testkit::crowded_third_diagonal_probability(n, w, k);
      if (p != testkit::crowded_third_diagonal_reference(n, w)) {
        out.fail("crowded third-diagonal probability at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " is " + to_string(p));
      }
      worst = std::max(worst, p);
    }
    crowded.push_back(to_double(worst * n * n));
  }
  if (!bounded(crowded)) out.fail("n^2 P(crowded third-diagonal box) grows");
  summary += "n^2 P(crowded) " + fixed(crowded.front()) + " -> " + fixed(crowded.back()) + "; ";
  for (EventKind kind : {EventKind::NonEmpty, EventKind::Alpha}) {
    const char* label = kind == EventKind::Alpha ? "A3" : "X3";
    for (int r = 1; r <= 2; ++r) {
      std::vector<double> gaps;
      for (int n = 8; n <= 18; ++n) {
        const auto exact = factorial_moments_third_diag(n, w, kind, r, ThirdDiagMode::ExactDp);
        const auto main = factorial_moments_third_diag(n, w, kind, r, ThirdDiagMode::MainTerm);
        Rational d = exact[r] - main[r];
        if (d < 0) d = -d;
        gaps.push_back(to_double(d));
      }
      for (std::size_t i = 1; i < gaps.size(); ++i) {
        if (!(gaps[i] < gaps[i - 1])) {
          out.fail(std::string(label) + " moment r=" + std::to_string(r) + ": |exact - main term| is " +
                   fixed(gaps[i - 1], 6) + " at n=" + std::to_string(7 + i) + " and " + fixed(gaps[i], 6) +
                   " at n=" + std::to_string(8 + i) + " (not monotone)");
          break;
        }
      }
      summary += std::string(label) + " r=" + std::to_string(r) + " gap " + fixed(gaps.front()) + " -> " +
                 fixed(gaps.back()) + "; ";
    }
  }
  out.note(summary);
  return out;
}

// 8. Sampler exactness.
Outcome sampler_exactness() {
  Outcome out;
  std::uint64_t paths = 0;
  for (const auto& w : testkit::small_weight_grid()) {
    for (int n = 1; n <= 6; ++n) {
      OracleMeasure oracle(n, w);
      ChainRuleModel model(n, w);
      for_each_tableau(n, [&](const Tableau& t) {
        ++paths;
        if (model.path_probability(t) != oracle.prob(t)) out.fail("path probability " + where(n, w));
      });
    }
  }
  const Weights w(1, 1);
  const Pmf exact = exact_statistic_pmf(6, w, Statistic::X2);
  std::string summary = std::to_string(paths) + " path probabilities exact; TV(empirical X2, exact) at n=6, 1e5 draws:";
  std::uint64_t seed = 77;
  for (SampleMethod m : {SampleMethod::ChainRule, SampleMethod::EnumAlias}) {
    Rng rng(seed++);
    const auto emp = empirical_pmf(6, w, Statistic::X2, 100000, rng, m);
    const double tv = to_double(tv_distance(emp.pmf, exact));
    summary += " " + to_string(m) + " " + fixed(tv, 5);
    if (!(tv < 0.01)) out.fail(to_string(m) + " empirical TV " + fixed(tv, 5) + " >= 0.01");
  }
  out.note(summary);
  return out;
}

// 9. Steady-state cross-validation.
Outcome asep_cross_validation() {
  Outcome out;
  std::mt19937_64 rng(909);
  std::map<TypeConvention, int> winners;
  int cases = 0;
  for (int k = 0; k < 12; ++k) {
    AsepParams p;
    p.alpha = random_rational(rng, 1, 9, 6);
    p.beta = random_rational(rng, 1, 9, 6);
    p.gamma = random_rational(rng, 0, 9, 6);
    do {
      p.delta = random_rational(rng, 0, 9, 6);
    } while (p.delta == p.gamma);
    p.q = random_rational(rng, 0, 9, 6);
    p.u = random_rational(rng, 1, 9, 6);
    for (int n = 1; n <= 3; ++n) {
      ++cases;
      const auto matching = cross_validate(n, p).matching();
      if (matching.size() != 1) {
        out.fail(std::to_string(matching.size()) + " conventions match at n=" + std::to_string(n));
        continue;
      }
      ++winners[matching.front()];
    }
  }
  if (winners.size() != 1) out.fail("different conventions match for different rates");
  if (!winners.empty()) {
    const TypeConvention c = winners.begin()->first;
    const Tableau fig = parse_tableau("7\nA..G..A\n.....D\n..B.G\n...D\n..B\n.G\nB\n");
    const std::string type = tableau_type(fig, c).to_symbols();
    if (type != "• • ∘ • ∘ ∘ ∘") out.fail("example type under " + to_string(c) + " is " + type);
    out.note(to_string(c) + " matches the generator exactly in all " + std::to_string(cases) +
             " cases (12 random rate tuples x n=1..3); example type " + type);
  }
  return out;
}

// 10. Performance.
Outcome performance() {
  Outcome out;
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  const Weights w(Rational(1, 2), Rational(3, 2));
  const Rational z = constrained_partition(20, w, {});
  const double dp_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (z != normalized_partition_closed(20, w)) out.fail("n=20 partition value is wrong");
  if (!(dp_seconds < 10)) out.fail("n=20 partition took " + fixed(dp_seconds, 2) + " s");
  t0 = Clock::now();
  const std::uint64_t count = count_tableaux(9);
  const double enum_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (count != 3628800U) out.fail("n=9 enumeration produced " + std::to_string(count) + " tableaux");
  if (!(enum_seconds < 60)) out.fail("n=9 enumeration took " + fixed(enum_seconds, 2) + " s");
  out.note("n=20 partition " + fixed(dp_seconds, 2) + " s; n=9 enumeration " + fixed(enum_seconds, 2) + " s");
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "partition-identities", 120, partition_identities},
      {2, "box-laws", 300, box_laws},
      {3, "second-diagonal-joint-laws", 600, second_diagonal_joint},
      {4, "gap-set-identities", 60, gap_sets},
      {5, "structural-lemmas", 600, structural_lemmas},
      {6, "second-diagonal-poisson-convergence", 300, second_diagonal_convergence},
      {7, "third-diagonal", 1800, third_diagonal},
      {8, "sampler-exactness", 300, sampler_exactness},
      {9, "asep-cross-validation", 300, asep_cross_validation},
      {10, "performance", 70, performance},
  };
  return all;
}

}  // namespace
}  // namespace staircase

int main(int argc, char** argv) {
  using namespace staircase;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > c.budget_seconds) o.fail("runtime " + fixed(seconds, 1) + " s exceeds budget");
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << fixed(seconds, 1)
              << " s] " << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
