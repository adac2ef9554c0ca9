#include "staircase/sampler.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"

namespace staircase {

namespace {

// Two bits per box in sweep order; at most 45 boxes for n = 9.
__extension__ using Code = unsigned __int128;

Code encode(const Tableau& t) {
  Code code = 0;
  int shift = 0;
  for (int col = 1; col <= t.size(); ++col) {
    for (int row = 1; row <= t.size() + 1 - col; ++row) {
      code |= static_cast<Code>(static_cast<unsigned>(t.cell(row, col))) << shift;
      shift += 2;
    }
  }
  return code;
}

Tableau decode(int n, Code code) {
  Tableau t(n);
  for (int col = 1; col <= n; ++col) {
    for (int row = 1; row <= n + 1 - col; ++row) {
      t.put(row, col, static_cast<Cell>(static_cast<unsigned>(code & 3U)));
      code >>= 2;
    }
  }
  return t;
}

// All tableaux of one size, grouped by (N_alpha, N_beta). Tableaux in a
// class share their weight, so a draw picks a class and then a uniform
// member.
struct ClassTable {
  std::vector<std::pair<int, int>> classes;
  std::vector<std::vector<Code>> members;
};

std::shared_ptr<const ClassTable> class_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ClassTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<ClassTable>();
  std::map<std::pair<int, int>, std::vector<Code>> grouped;
  for_each_tableau(n, [&](const Tableau& t) {
    auto c = symbol_counts(t);
    grouped[{c.alpha, c.beta}].push_back(encode(t));
  });
  for (auto& [key, codes] : grouped) {
    table->classes.push_back(key);
    table->members.push_back(std::move(codes));
  }
  cache.emplace(n, table);
  return table;
}

// Walker alias table over the weight classes with exact integer
// thresholds: column i is kept when u < threshold[i] for u uniform in
// [0, total).
struct AliasTable {
  std::shared_ptr<const ClassTable> table;
  std::vector<std::size_t> index;  // class behind each column
  std::vector<BigInt> threshold;
  std::vector<std::size_t> alias;
  BigInt total;
};

std::shared_ptr<const AliasTable> alias_table(int n, const Weights& w) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const AliasTable>> cache;
  const std::string key = std::to_string(n) + "|" + to_string(w.a()) + "|" + to_string(w.b());
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto alias = std::make_shared<AliasTable>();
  alias->table = class_table(n);
  ScaledWeights sw(w);
  std::vector<BigInt> weight;
  for (std::size_t i = 0; i < alias->table->classes.size(); ++i) {
    auto [na, nb] = alias->table->classes[i];
    // a^(n-na) b^(n-nb) scaled by the common factor d^(2n).
    BigInt wt = BigInt(static_cast<unsigned long>(alias->table->members[i].size())) *
                power(sw.pa, static_cast<unsigned>(n - na)) * power(sw.pb, static_cast<unsigned>(n - nb)) *
                power(sw.d, static_cast<unsigned>(na + nb));
    if (sgn(wt) == 0) continue;
    alias->index.push_back(i);
    weight.push_back(wt);
  }
  const std::size_t k = weight.size();
  BigInt total = 0;
  for (const auto& x : weight) total += x;
  alias->total = total;
  alias->threshold.assign(k, total);
  alias->alias.resize(k);
  std::vector<BigInt> q(k);
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  for (std::size_t i = 0; i < k; ++i) {
    q[i] = weight[i] * static_cast<unsigned long>(k);
    alias->alias[i] = i;
    (q[i] < total ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    std::size_t s = small.back();
    small.pop_back();
    std::size_t l = large.back();
    alias->threshold[s] = q[s];
    alias->alias[s] = l;
    q[l] -= total - q[s];
    if (q[l] < total) {
      large.pop_back();
      small.push_back(l);
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, alias).first->second;
}

std::shared_ptr<const ChainRuleModel> chain_model(int n, const Weights& w) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const ChainRuleModel>> cache;
  const std::string key = std::to_string(n) + "|" + to_string(w.a()) + "|" + to_string(w.b());
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto model = std::make_shared<const ChainRuleModel>(n, w);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, model).first->second;
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform draw needs a positive bound");
  // Reject the low residue class so that x % bound is exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("uniform draw needs a positive bound");
  if (bound.fits_ulong_p()) return BigInt(static_cast<unsigned long>(uniform_below(rng, bound.get_ui())));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    BigInt x = 0;
    std::size_t have = 0;
    while (have < bits) {
      const std::uint64_t word = rng();
      const std::size_t take = std::min<std::size_t>(64, bits - have);
      const std::uint64_t part = take == 64 ? word : (word >> (64 - take));
      BigInt chunk;
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(part), 0, 0, &part);
      x <<= take;
      x += chunk;
      have += take;
    }
    if (x < bound) return x;
  }
}

bool bernoulli(Rng& rng, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("Bernoulli probability must lie in [0, 1]");
  if (p == 0) return false;
  if (p == 1) return true;
  return uniform_below(rng, p.get_den()) < p.get_num();
}

SampleMethod parse_sample_method(std::string_view name) {
  if (name == "enum_alias") return SampleMethod::EnumAlias;
  if (name == "chain_rule") return SampleMethod::ChainRule;
  throw std::invalid_argument("unknown sampling method '" + std::string(name) +
                              "', expected enum_alias or chain_rule");
}

std::string to_string(SampleMethod m) { return m == SampleMethod::EnumAlias ? "enum_alias" : "chain_rule"; }

Tableau sample(int n, const Weights& w, Rng& rng, SampleMethod method) {
  if (method == SampleMethod::EnumAlias) {
    check_enum_size(n, Alphabet::AlphaBeta);
    auto alias = alias_table(n, w);
    const std::size_t column = uniform_below(rng, static_cast<std::uint64_t>(alias->index.size()));
    const BigInt u = uniform_below(rng, alias->total);
    const std::size_t pick = u < alias->threshold[column] ? column : alias->alias[column];
    const auto& members = alias->table->members[alias->index[pick]];
    return decode(n, members[uniform_below(rng, static_cast<std::uint64_t>(members.size()))]);
  }
  if (n < 1 || n > kMaxDpSize) {
    throw std::out_of_range("chain-rule sampling supports sizes 1.." + std::to_string(kMaxDpSize));
  }
  auto model = chain_model(n, w);
  return model->draw([&rng](const BigInt& bound) { return uniform_below(rng, bound); });
}

Tableau randomize_four_params(const Tableau& t, const FourWeights& fw, Rng& rng) {
  fw.check();
  if (!t.is_alpha_beta()) throw std::invalid_argument("randomization expects an alpha/beta tableau");
  const Rational p_gamma = fw.gamma / (fw.alpha + fw.gamma);
  const Rational p_delta = fw.delta / (fw.beta + fw.delta);
  Tableau out = t;
  for (int col = 1; col <= t.size(); ++col) {
    for (int row = 1; row <= t.size() + 1 - col; ++row) {
      const Cell c = t.cell(row, col);
      if (c == Cell::Alpha && bernoulli(rng, p_gamma)) out.put(row, col, Cell::Gamma);
      if (c == Cell::Beta && bernoulli(rng, p_delta)) out.put(row, col, Cell::Delta);
    }
  }
  return out;
}

Tableau sample_four_params(int n, const FourWeights& fw, Rng& rng, SampleMethod method) {
  return randomize_four_params(sample(n, fw.merged(), rng, method), fw, rng);
}

EmpiricalPmf empirical_pmf(int n, const Weights& w, Statistic s, std::uint64_t samples, Rng& rng,
                           SampleMethod method) {
  if (samples == 0) throw std::invalid_argument("empirical law needs at least one sample");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(statistic_support_bound(n, s) + 1), 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    ++counts[static_cast<std::size_t>(statistic_value(sample(n, w, rng, method), s))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  EmpiricalPmf out;
  out.samples = samples;
  std::vector<Rational> masses;
  const double total = static_cast<double>(samples);
  for (auto c : counts) {
    Rational m(BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(samples)));
    m.canonicalize();
    masses.push_back(m);
    const double p = static_cast<double>(c) / total;
    out.standard_errors.push_back(std::sqrt(p * (1 - p) / total));
  }
  out.pmf = Pmf(std::move(masses));
  return out;
}

}  // namespace staircase
