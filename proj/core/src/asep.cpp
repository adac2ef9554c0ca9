#include "staircase/asep.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

#include "staircase/enumerate.hpp"

namespace staircase {

namespace {

// An empty box is governed either by the beta-like symbol that is the
// nearest symbol to its right (row governance) or else by the nearest
// symbol below it (column governance).
struct Governed {
  int row_left = 0;  // empty boxes to the left, governed through the row
  int above = 0;     // empty boxes above, governed through the column
};

// governed[row-1][col-1] for every symbol box of a valid tableau.
std::vector<std::vector<Governed>> governance(const Tableau& t) {
  const int n = t.size();
  std::vector<std::vector<Governed>> g(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) g[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(n + 1 - i));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) {
      if (t.cell(i, j) != Cell::Empty) continue;
      int jr = j + 1;
      while (t.cell(i, jr) == Cell::Empty) ++jr;  // the diagonal box is filled
      if (is_beta_like(t.cell(i, jr))) {
        ++g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jr - 1)].row_left;
        continue;
      }
      int ib = i + 1;
      while (t.cell(ib, j) == Cell::Empty) ++ib;
      ++g[static_cast<std::size_t>(ib - 1)][static_cast<std::size_t>(j - 1)].above;
    }
  }
  return g;
}

bool filled_site(Cell c, TypeConvention convention) {
  switch (c) {
    case Cell::Alpha: return true;
    case Cell::Gamma: return convention == TypeConvention::AlphaGamma;
    case Cell::Delta: return convention == TypeConvention::AlphaDelta;
    default: return false;
  }
}

void check_valid(const Tableau& t) {
  auto v = validate(t);
  if (!v.empty()) throw std::invalid_argument("not a staircase tableau: " + describe(v.front()));
}

}  // namespace

void AsepParams::check() const {
  for (const Rational* r : {&alpha, &beta, &gamma, &delta, &q, &u}) {
    if (*r < 0) throw std::invalid_argument("ASEP rates must be nonnegative");
  }
  if (u + q <= 0) throw std::invalid_argument("ASEP needs u + q > 0");
  if (alpha + delta <= 0) throw std::invalid_argument("ASEP needs a positive in-rate (alpha + delta > 0)");
}

AsepParams AsepParams::normalized() const {
  check();
  if (u <= 0) throw std::invalid_argument("normalizing to u = 1 requires u > 0");
  return {alpha / u, beta / u, gamma / u, delta / u, q / u, Rational(1)};
}

TypeConvention parse_type_convention(std::string_view name) {
  if (name == "alpha_gamma") return TypeConvention::AlphaGamma;
  if (name == "alpha_delta") return TypeConvention::AlphaDelta;
  throw std::invalid_argument("unknown type convention '" + std::string(name) +
                              "', expected alpha_gamma or alpha_delta");
}

std::string to_string(TypeConvention c) {
  return c == TypeConvention::AlphaGamma ? "alpha_gamma" : "alpha_delta";
}

std::string AsepState::to_bits() const {
  std::string s;
  for (int i = 1; i <= n; ++i) s += filled(i) ? '1' : '0';
  return s;
}

std::string AsepState::to_symbols() const {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) s += ' ';
    s += filled(i) ? "•" : "∘";
  }
  return s;
}

AsepState tableau_type(const Tableau& t, TypeConvention convention) {
  const int n = t.size();
  AsepState s{n, 0};
  for (int i = 1; i <= n; ++i) {
    if (filled_site(t.cell(i, n + 1 - i), convention)) s.bits |= 1U << (i - 1);
  }
  return s;
}

Rational Monomial::evaluate(const AsepParams& p) const {
  return power(p.alpha, static_cast<unsigned>(alpha)) * power(p.beta, static_cast<unsigned>(beta)) *
         power(p.gamma, static_cast<unsigned>(gamma)) * power(p.delta, static_cast<unsigned>(delta)) *
         power(p.u, static_cast<unsigned>(u)) * power(p.q, static_cast<unsigned>(q));
}

std::string FilledGrid::to_text() const {
  const int n = tableau.size();
  std::string s = std::to_string(n) + "\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) {
      const Fill f = fills[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      s += f == Fill::U ? 'u' : f == Fill::Q ? 'q' : to_char(tableau.cell(i, j));
    }
    s += '\n';
  }
  return s;
}

FilledGrid uq_fill(const Tableau& t) {
  check_valid(t);
  const int n = t.size();
  FilledGrid grid{t, {}, {}};
  grid.fills.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& row = grid.fills[static_cast<std::size_t>(i - 1)];
    row.assign(static_cast<std::size_t>(n + 1 - i), Fill::Symbol);
    for (int j = 1; j <= n + 1 - i; ++j) {
      const Cell c = t.cell(i, j);
      switch (c) {
        case Cell::Alpha: ++grid.weight.alpha; continue;
        case Cell::Beta: ++grid.weight.beta; continue;
        case Cell::Gamma: ++grid.weight.gamma; continue;
        case Cell::Delta: ++grid.weight.delta; continue;
        case Cell::Empty: break;
      }
      int jr = j + 1;
      while (t.cell(i, jr) == Cell::Empty) ++jr;
      Fill f;
      if (is_beta_like(t.cell(i, jr))) {
        f = t.cell(i, jr) == Cell::Beta ? Fill::U : Fill::Q;
      } else {
        int ib = i + 1;
        while (t.cell(ib, j) == Cell::Empty) ++ib;
        const Cell below = t.cell(ib, j);
        f = below == Cell::Alpha || below == Cell::Delta ? Fill::U : Fill::Q;
      }
      row[static_cast<std::size_t>(j - 1)] = f;
      if (f == Fill::U) {
        ++grid.weight.u;
      } else {
        ++grid.weight.q;
      }
    }
  }
  return grid;
}

Pmf steady_state_via_tableaux(int n, const AsepParams& p, TypeConvention convention) {
  p.check();
  if (n < 1 || n > kMaxAsepTableauxSize) {
    throw std::out_of_range("tableaux steady state supports sizes 1.." +
                            std::to_string(kMaxAsepTableauxSize));
  }
  // Each symbol of an alpha/beta tableau expands independently:
  //   alpha-like governing C boxes above:   alpha u^C + gamma q^C
  //   beta-like governing R left, C above:  beta u^R q^C + delta q^R u^C
  std::vector<Rational> u_pow;
  std::vector<Rational> q_pow;
  for (int k = 0; k <= n; ++k) {
    u_pow.push_back(power(p.u, static_cast<unsigned>(k)));
    q_pow.push_back(power(p.q, static_cast<unsigned>(k)));
  }
  const auto alpha_term = [&](int c) -> Rational { return p.alpha * u_pow[static_cast<std::size_t>(c)]; };
  const auto gamma_term = [&](int c) -> Rational { return p.gamma * q_pow[static_cast<std::size_t>(c)]; };
  const auto beta_term = [&](int r, int c) -> Rational {
    return p.beta * u_pow[static_cast<std::size_t>(r)] * q_pow[static_cast<std::size_t>(c)];
  };
  const auto delta_term = [&](int r, int c) -> Rational {
    return p.delta * q_pow[static_cast<std::size_t>(r)] * u_pow[static_cast<std::size_t>(c)];
  };

  // Off-diagonal products, summed per diagonal signature (kind, R, C).
  std::map<std::vector<int>, Rational> by_signature;
  for_each_tableau(n, [&](const Tableau& t) {
    const auto g = governance(t);
    Rational off(1);
    std::vector<int> signature;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n + 1 - i; ++j) {
        const Cell c = t.cell(i, j);
        if (c == Cell::Empty) continue;
        const Governed& gv = g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (i + j == n + 1) {
          signature.insert(signature.end(), {c == Cell::Alpha ? 0 : 1, gv.row_left, gv.above});
        } else if (c == Cell::Alpha) {
          off *= alpha_term(gv.above) + gamma_term(gv.above);
        } else {
          off *= beta_term(gv.row_left, gv.above) + delta_term(gv.row_left, gv.above);
        }
        if (off == 0) return;
      }
    }
    by_signature[signature] += off;
  });

  const std::size_t states = std::size_t{1} << n;
  std::vector<Rational> mass(states, Rational(0));
  std::vector<Rational> site_law;
  for (const auto& [signature, off] : by_signature) {
    // Tensor product of per-site (empty, filled) weights.
    site_law.assign(1, off);
    for (int i = 1; i <= n; ++i) {
      const int kind = signature[static_cast<std::size_t>(3 * (i - 1))];
      const int r = signature[static_cast<std::size_t>(3 * (i - 1) + 1)];
      const int c = signature[static_cast<std::size_t>(3 * (i - 1) + 2)];
      Rational filled(0);
      Rational empty(0);
      if (kind == 0) {
        filled += alpha_term(c);
        (filled_site(Cell::Gamma, convention) ? filled : empty) += gamma_term(c);
      } else {
        empty += beta_term(r, c);
        (filled_site(Cell::Delta, convention) ? filled : empty) += delta_term(r, c);
      }
      std::vector<Rational> next(site_law.size() * 2);
      for (std::size_t s = 0; s < site_law.size(); ++s) {
        next[s] = site_law[s] * empty;
        next[s | (std::size_t{1} << (i - 1))] = site_law[s] * filled;
      }
      site_law.swap(next);
    }
    for (std::size_t s = 0; s < states; ++s) mass[s] += site_law[s];
  }
  Rational z(0);
  for (const auto& m : mass) z += m;
  if (z == 0) throw std::domain_error("all tableaux have zero weight for these rates");
  for (auto& m : mass) m /= z;
  return Pmf(std::move(mass));
}

Pmf steady_state_via_four_symbol_enumeration(int n, const AsepParams& p, TypeConvention convention) {
  p.check();
  std::vector<Rational> mass(std::size_t{1} << n, Rational(0));
  for_each_tableau(
      n,
      [&](const Tableau& t) {
        mass[tableau_type(t, convention).bits] += uq_fill(t).weight.evaluate(p);
      },
      Alphabet::FourSymbol);
  Rational z(0);
  for (const auto& m : mass) z += m;
  if (z == 0) throw std::domain_error("all tableaux have zero weight for these rates");
  for (auto& m : mass) m /= z;
  return Pmf(std::move(mass));
}

std::vector<std::vector<Rational>> asep_generator(int n, const AsepParams& p) {
  p.check();
  if (n < 1 || n > kMaxAsepGeneratorSize) {
    throw std::out_of_range("generator supports sizes 1.." + std::to_string(kMaxAsepGeneratorSize));
  }
  const std::uint32_t states = 1U << n;
  std::vector<std::vector<Rational>> rates(states, std::vector<Rational>(states, Rational(0)));
  const std::uint32_t first = 1U;
  const std::uint32_t last = 1U << (n - 1);
  for (std::uint32_t s = 0; s < states; ++s) {
    auto& row = rates[s];
    if ((s & first) == 0) {
      row[s | first] += p.alpha;
    } else {
      row[s & ~first] += p.gamma;
    }
    if ((s & last) == 0) {
      row[s | last] += p.delta;
    } else {
      row[s & ~last] += p.beta;
    }
    for (int i = 0; i + 1 < n; ++i) {
      const std::uint32_t here = 1U << i;
      const std::uint32_t right = 1U << (i + 1);
      if ((s & here) != 0 && (s & right) == 0) row[(s & ~here) | right] += p.u;
      if ((s & here) == 0 && (s & right) != 0) row[(s & ~right) | here] += p.q;
    }
  }
  return rates;
}

Pmf steady_state_via_generator(int n, const AsepParams& p) {
  const auto rates = asep_generator(n, p);
  const std::size_t m = rates.size();
  // Rows of the transposed generator: sum_from pi(from) Q(from, to) = 0,
  // with the last equation replaced by sum pi = 1.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t from = 0; from < m; ++from) {
    for (std::size_t to = 0; to < m; ++to) {
      if (from == to || rates[from][to] == 0) continue;
      a[to][from] += rates[from][to];
      a[from][from] -= rates[from][to];
    }
  }
  for (std::size_t j = 0; j <= m; ++j) a[m - 1][j] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::domain_error("the exclusion process has no unique stationary law");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= m; ++j) a[col][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j <= m; ++j) {
        if (a[col][j] != 0) a[r][j] -= f * a[col][j];
      }
    }
  }
  std::vector<Rational> pi(m);
  for (std::size_t i = 0; i < m; ++i) {
    pi[i] = a[i][m];
    if (pi[i] < 0) throw std::domain_error("stationary solve produced a negative mass");
  }
  return Pmf(std::move(pi));
}

std::vector<TypeConvention> CrossValidation::matching() const {
  std::vector<TypeConvention> out;
  for (const auto& r : results) {
    if (r.matches) out.push_back(r.convention);
  }
  return out;
}

std::string CrossValidation::to_json() const {
  nlohmann::ordered_json params_json;
  params_json["alpha"] = to_string(params.alpha);
  params_json["beta"] = to_string(params.beta);
  params_json["gamma"] = to_string(params.gamma);
  params_json["delta"] = to_string(params.delta);
  params_json["q"] = to_string(params.q);
  params_json["u"] = to_string(params.u);
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json report;
    report["n"] = n;
    report["params"] = params_json;
    report["convention"] = to_string(r.convention);
    report["matches"] = r.matches;
    report["per_state"] = nlohmann::ordered_json::array();
    for (const auto& s : r.per_state) {
      report["per_state"].push_back({{"state", s.state.to_bits()},
                                     {"tableaux_prob", to_string(s.tableaux_prob)},
                                     {"generator_prob", to_string(s.generator_prob)},
                                     {"equal", s.equal}});
    }
    j["reports"].push_back(report);
  }
  j["matching"] = nlohmann::ordered_json::array();
  for (auto c : matching()) j["matching"].push_back(to_string(c));
  return j.dump(2) + "\n";
}

CrossValidation cross_validate(int n, const AsepParams& p, const std::vector<TypeConvention>& conventions) {
  if (n < 1 || n > 6) throw std::out_of_range("cross-validation supports sizes 1..6");
  CrossValidation out;
  out.n = n;
  out.params = p.normalized();
  const Pmf generator = steady_state_via_generator(n, out.params);
  for (TypeConvention c : conventions) {
    const Pmf tableaux = steady_state_via_tableaux(n, out.params, c);
    ConventionResult result{c, true, {}};
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      StateComparison cmp{AsepState{n, s}, tableaux.at(s), generator.at(s), false};
      cmp.equal = cmp.tableaux_prob == cmp.generator_prob;
      result.matches = result.matches && cmp.equal;
      result.per_state.push_back(cmp);
    }
    out.results.push_back(std::move(result));
  }
  return out;
}

}  // namespace staircase
