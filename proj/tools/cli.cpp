#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "selftest.hpp"
#include "staircase/asep.hpp"
#include "staircase/dpcount.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/formulas.hpp"
#include "staircase/moments.hpp"
#include "staircase/sampler.hpp"

namespace staircase::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for arguments that parse but make no sense together.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << '\n';
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_rational(item));
  if (values.size() != expected) {
    throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated rationals, got '" + text +
                     "'");
  }
  return values;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Shared --a/--b options.
struct WeightOptions {
  std::string a = "1";
  std::string b = "1";

  void add(CLI::App* cmd) {
    cmd->add_option("--a", a, "a = 1/alpha as p/q (0 means alpha = infinity)")->capture_default_str();
    cmd->add_option("--b", b, "b = 1/beta as p/q (0 means beta = infinity)")->capture_default_str();
  }
  Weights weights() const { return Weights(parse_rational(a), parse_rational(b)); }
};

struct DiagonalKind {
  Diagonal diagonal;
  EventKind kind;
};

DiagonalKind diagonal_kind_of(Statistic s) {
  switch (s) {
    case Statistic::A2: return {Diagonal::Second, EventKind::Alpha};
    case Statistic::B2: return {Diagonal::Second, EventKind::Beta};
    case Statistic::X2: return {Diagonal::Second, EventKind::NonEmpty};
    case Statistic::A3: return {Diagonal::Third, EventKind::Alpha};
    case Statistic::B3: return {Diagonal::Third, EventKind::Beta};
    case Statistic::X3: return {Diagonal::Third, EventKind::NonEmpty};
    default: throw UsageError("statistic " + to_string(s) + " has no diagonal moment formulas");
  }
}

EventKind parse_kind(const std::string& s) {
  if (s == "alpha") return EventKind::Alpha;
  if (s == "beta") return EventKind::Beta;
  if (s == "nonempty") return EventKind::NonEmpty;
  throw UsageError("unknown kind '" + s + "', expected alpha, beta or nonempty");
}

std::string kind_name(EventKind k) {
  switch (k) {
    case EventKind::Alpha: return "alpha";
    case EventKind::Beta: return "beta";
    case EventKind::NonEmpty: return "nonempty";
  }
  return "?";
}

std::string reason_text(const FormulaValue& v) {
  if (v.order_only) return "order-only";
  return to_string(v.reason);
}

// ---- count ---------------------------------------------------------------

struct CountOptions {
  int n = 0;
  bool four = false;
  std::string alpha = "1";
  std::string beta = "1";
  std::string gamma = "1";
  std::string delta = "1";
};

int run_count(const CountOptions& o, bool json, std::ostream& out) {
  std::optional<Rational> brute;
  Rational closed;
  Json params;
  if (o.four) {
    FourWeights fw{parse_rational(o.alpha), parse_rational(o.beta), parse_rational(o.gamma), parse_rational(o.delta)};
    closed = partition_closed(o.n, fw);
    if (o.n <= kMaxFourSymbolEnumSize) brute = brute_partition(o.n, fw);
    params = {{"alpha", to_string(fw.alpha)}, {"beta", to_string(fw.beta)}, {"gamma", to_string(fw.gamma)},
              {"delta", to_string(fw.delta)}};
  } else {
    const Rational alpha = parse_rational(o.alpha);
    const Rational beta = parse_rational(o.beta);
    closed = partition_closed(o.n, alpha, beta);
    if (o.n <= kMaxEnumSize) brute = brute_partition(o.n, alpha, beta);
    params = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}};
  }
  const std::string brute_text = brute ? to_string(*brute) : "";
  if (json) {
    Json j = {{"n", o.n}, {"params", params}, {"closed", to_string(closed)}};
    j["brute"] = brute ? Json(brute_text) : Json(nullptr);
    if (brute) j["agree"] = *brute == closed;
    print_json(out, j);
    return kExitOk;
  }
  std::vector<std::string> header{"n"};
  std::vector<std::string> row{std::to_string(o.n)};
  for (const auto& [key, value] : params.items()) {
    header.push_back(key);
    row.push_back(value.get<std::string>());
  }
  header.insert(header.end(), {"closed", "brute"});
  row.insert(row.end(), {to_string(closed), brute_text});
  csv_row(out, header);
  csv_row(out, row);
  return kExitOk;
}

// ---- prob ----------------------------------------------------------------

struct ProbOptions {
  int n = 0;
  WeightOptions w;
  std::vector<int> box;
};

int run_prob(const ProbOptions& o, bool json, std::ostream& out) {
  const Weights w = o.w.weights();
  if (o.box.size() != 2) throw UsageError("--box expects i,j");
  const Box box{o.box[0], o.box[1]};
  struct Row {
    std::string source;
    Rational alpha, beta, empty;
  };
  std::vector<Row> rows;
  const BoxLaw law = box_law(o.n, w, box);
  rows.push_back({"formula", law.alpha, law.beta, law.empty});
  const ConstraintSet ca{{box, Requirement::MustAlpha}};
  const ConstraintSet cb{{box, Requirement::MustBeta}};
  const ConstraintSet ce{{box, Requirement::MustEmpty}};
  if (o.n <= kMaxDpSize) rows.push_back({"dp", event_prob(o.n, w, ca), event_prob(o.n, w, cb), event_prob(o.n, w, ce)});
  if (o.n <= kCliOracleMaxSize) {
    OracleMeasure oracle(o.n, w);
    rows.push_back({"oracle", oracle.prob(ca), oracle.prob(cb), oracle.prob(ce)});
  }
  const std::string box_text = "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")";
  if (json) {
    Json j = {{"n", o.n}, {"a", to_string(w.a())}, {"b", to_string(w.b())}, {"box", {box.row, box.col}}};
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"source", r.source},
                      {"alpha", to_string(r.alpha)},
                      {"beta", to_string(r.beta)},
                      {"empty", to_string(r.empty)}});
    }
    j["laws"] = list;
    print_json(out, j);
    return kExitOk;
  }
  csv_row(out, {"n", "a", "b", "box", "source", "alpha", "beta", "empty"});
  for (const auto& r : rows) {
    csv_row(out, {std::to_string(o.n), to_string(w.a()), to_string(w.b()), box_text, r.source, to_string(r.alpha),
                  to_string(r.beta), to_string(r.empty)});
  }
  return kExitOk;
}

// ---- joint ---------------------------------------------------------------

struct JointOptions {
  int n = 0;
  int diag = 2;
  std::string kind;
  std::string cols;
  WeightOptions w;
};

int run_joint(const JointOptions& o, bool json, std::ostream& out) {
  const Weights w = o.w.weights();
  const EventKind kind = parse_kind(o.kind);
  const IndexTuple t = parse_index_tuple(o.cols);
  const Diagonal d = o.diag == 2 ? Diagonal::Second : Diagonal::Third;
  const ConstraintSet event = diagonal_event(o.n, d, t, kind);
  struct Row {
    std::string source;
    Rational value;
    std::string reason;
  };
  std::vector<Row> rows;
  if (d == Diagonal::Second) {
    const FormulaValue f = kind == EventKind::Alpha  ? second_diag_joint_alpha(o.n, w, t)
                           : kind == EventKind::Beta ? second_diag_joint_beta(o.n, w, t)
                                                     : second_diag_joint_nonempty(o.n, w, t);
    rows.push_back({"formula", f.value, reason_text(f)});
  } else if (kind != EventKind::Beta) {
    const FormulaValue f = third_diag_main_term(o.n, w, t, kind);
    rows.push_back({"main_term", f.value, reason_text(f)});
  }
  if (o.n <= kMaxDpSize) rows.push_back({"dp", event_prob(o.n, w, event), ""});
  if (o.n <= kCliOracleMaxSize) rows.push_back({"oracle", oracle_event_prob(o.n, w, event), ""});
  if (json) {
    Json j = {{"n", o.n},     {"a", to_string(w.a())}, {"b", to_string(w.b())},
              {"diag", o.diag}, {"kind", kind_name(kind)}, {"cols", t.cols()}};
    Json list = Json::array();
    for (const auto& r : rows) {
      Json item = {{"source", r.source}, {"value", to_string(r.value)}};
      if (!r.reason.empty()) item["reason"] = r.reason;
      list.push_back(item);
    }
    j["values"] = list;
    print_json(out, j);
    return kExitOk;
  }
  csv_row(out, {"n", "a", "b", "diag", "kind", "cols", "source", "value", "reason"});
  for (const auto& r : rows) {
    csv_row(out, {std::to_string(o.n), to_string(w.a()), to_string(w.b()), std::to_string(o.diag), kind_name(kind),
                  to_string(t), r.source, to_string(r.value), r.reason});
  }
  return kExitOk;
}

// ---- moments -------------------------------------------------------------

struct MomentsOptions {
  int n = 0;
  WeightOptions w;
  std::string stat;
  int r = 4;
  std::string mode = "auto";
};

int run_moments(const MomentsOptions& o, bool json, std::ostream& out) {
  const Weights w = o.w.weights();
  const Statistic s = parse_statistic(o.stat);
  const DiagonalKind dk = diagonal_kind_of(s);
  FactorialMoments mu;
  std::string mode = o.mode;
  if (dk.diagonal == Diagonal::Second) {
    if (mode == "auto") mode = "formula";
    if (mode == "formula") {
      const int R = std::min(o.r, second_diag_max_order(o.n));
      mu = factorial_moments_second_diag(o.n, w, dk.kind, R);
    } else if (mode == "exact_dp") {
      mu = factorial_moments_of(statistic_pmf_dp(o.n, w, s), o.r);
    } else {
      throw UsageError("second-diagonal moments support --mode formula or exact_dp");
    }
  } else {
    if (mode == "auto") mode = "exact_dp";
    if (mode == "exact_dp") {
      mu = factorial_moments_third_diag(o.n, w, dk.kind, o.r, ThirdDiagMode::ExactDp);
    } else if (mode == "main_term") {
      mu = factorial_moments_third_diag(o.n, w, dk.kind, o.r, ThirdDiagMode::MainTerm);
    } else {
      throw UsageError("third-diagonal moments support --mode exact_dp or main_term");
    }
  }
  // Orders above the structural support vanish; report them explicitly.
  std::vector<Rational> values = mu.values();
  while (static_cast<int>(values.size()) <= o.r) values.emplace_back(0);
  if (json) {
    Json list = Json::array();
    for (const auto& v : values) list.push_back(to_string(v));
    print_json(out, {{"n", o.n},
                     {"a", to_string(w.a())},
                     {"b", to_string(w.b())},
                     {"statistic", to_string(s)},
                     {"mode", mode},
                     {"factorial_moments", list}});
    return kExitOk;
  }
  csv_row(out, {"r", "moment"});
  for (std::size_t r = 0; r < values.size(); ++r) csv_row(out, {std::to_string(r), to_string(values[r])});
  return kExitOk;
}

// ---- pmf -----------------------------------------------------------------

struct PmfOptions {
  int n = 0;
  WeightOptions w;
  std::string stat;
  std::string source = "exact";
};

int run_pmf(const PmfOptions& o, bool json, std::ostream& out) {
  const Weights w = o.w.weights();
  const Statistic s = parse_statistic(o.stat);
  Pmf p;
  if (o.source == "exact") {
    p = exact_statistic_pmf(o.n, w, s);
  } else if (o.source == "dp") {
    p = statistic_pmf_dp(o.n, w, s);
  } else if (o.source == "oracle") {
    p = oracle_statistic_pmf(o.n, w, s);
  } else {
    throw UsageError("unknown --source '" + o.source + "', expected exact, dp or oracle");
  }
  if (json) {
    Json list = Json::array();
    for (const auto& m : p.masses()) list.push_back(to_string(m));
    print_json(out, {{"n", o.n},
                     {"a", to_string(w.a())},
                     {"b", to_string(w.b())},
                     {"statistic", to_string(s)},
                     {"source", o.source},
                     {"masses", list}});
    return kExitOk;
  }
  csv_row(out, {"k", "mass"});
  for (std::size_t k = 0; k < p.size(); ++k) csv_row(out, {std::to_string(k), to_string(p[k])});
  return kExitOk;
}

// ---- converge ------------------------------------------------------------

struct ConvergeOptions {
  std::string stat;
  std::vector<int> ns;
  WeightOptions w;
  std::string lambda;
};

int run_converge(const ConvergeOptions& o, bool json, std::ostream& out) {
  const Statistic s = parse_statistic(o.stat);
  const Rational lambda = o.lambda.empty() ? poisson_limit_for(s) : parse_rational(o.lambda);
  const auto report = convergence_report(o.ns, o.w.weights(), s, lambda);
  out << (json ? report.to_json() : report.to_csv());
  if (json) out << '\n';
  return kExitOk;
}

// ---- sample --------------------------------------------------------------

struct SampleOptions {
  int n = 0;
  WeightOptions w;
  std::string four;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string method = "chain_rule";
};

int run_sample(const SampleOptions& o, bool json, std::ostream& out) {
  if (!o.seed) throw UsageError("sample requires an explicit --seed");
  const SampleMethod method = parse_sample_method(o.method);
  Rng rng(*o.seed);
  Json header = {{"n", o.n}};
  std::function<Tableau()> draw;
  std::optional<FourWeights> fw;
  if (!o.four.empty()) {
    const auto v = parse_rational_list(o.four, 4, "--four");
    fw = FourWeights{v[0], v[1], v[2], v[3]};
    fw->check();
    header["alpha"] = to_string(fw->alpha);
    header["beta"] = to_string(fw->beta);
    header["gamma"] = to_string(fw->gamma);
    header["delta"] = to_string(fw->delta);
  } else {
    const Weights w = o.w.weights();
    header["a"] = to_string(w.a());
    header["b"] = to_string(w.b());
  }
  header["seed"] = *o.seed;
  header["method"] = to_string(method);
  header["count"] = o.count;
  const Weights w = fw ? fw->merged() : o.w.weights();
  std::vector<std::string> records;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const Tableau t = fw ? sample_four_params(o.n, *fw, rng, method) : sample(o.n, w, rng, method);
    records.push_back(to_text(t));
  }
  if (json) {
    print_json(out, {{"header", header}, {"samples", records}});
    return kExitOk;
  }
  out << header.dump() << '\n';
  for (const auto& r : records) out << r;
  return kExitOk;
}

// ---- asep-verify ---------------------------------------------------------

struct AsepOptions {
  int n = 0;
  std::string rates = "1,1,0,0,1,1";
  std::string convention = "both";
};

int run_asep(const AsepOptions& o, bool json, std::ostream& out) {
  const auto v = parse_rational_list(o.rates, 6, "--rates");
  const AsepParams p{v[0], v[1], v[2], v[3], v[4], v[5]};
  std::vector<TypeConvention> conventions;
  if (o.convention == "both") {
    conventions = {TypeConvention::AlphaGamma, TypeConvention::AlphaDelta};
  } else {
    conventions = {parse_type_convention(o.convention)};
  }
  const CrossValidation cv = cross_validate(o.n, p, conventions);
  if (json) {
    out << cv.to_json() << '\n';
    return kExitOk;
  }
  csv_row(out, {"n", "convention", "state", "tableaux_prob", "generator_prob", "equal", "convention_matches"});
  for (const auto& r : cv.results) {
    for (const auto& st : r.per_state) {
      csv_row(out, {std::to_string(o.n), to_string(r.convention), st.state.to_bits(), to_string(st.tableaux_prob),
                    to_string(st.generator_prob), bool_text(st.equal), bool_text(r.matches)});
    }
  }
  return kExitOk;
}

// ---- selftest ------------------------------------------------------------

int run_selftest_command(int max_n, bool json, std::ostream& out, std::ostream& err) {
  const auto results = run_selftest(max_n);
  bool ok = true;
  if (json) {
    Json list = Json::array();
    for (const auto& r : results) {
      Json item = {{"suite", r.name}, {"checks", r.checks}, {"mismatches", r.mismatches}, {"passed", r.passed()}};
      if (!r.passed()) item["first_mismatch"] = r.first_mismatch;
      list.push_back(item);
    }
    print_json(out, {{"max_n", max_n}, {"suites", list}});
  } else {
    csv_row(out, {"suite", "checks", "mismatches", "status"});
  }
  for (const auto& r : results) {
    if (!json) {
      csv_row(out, {r.name, std::to_string(r.checks), std::to_string(r.mismatches), r.passed() ? "PASS" : "FAIL"});
    }
    if (!r.passed()) {
      ok = false;
      err << "selftest mismatch in " << r.name << ": " << r.first_mismatch << '\n';
    }
  }
  return ok ? kExitOk : kExitSelftestMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact experiments on random staircase tableaux", "staircase-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of CSV");

  std::function<int()> action;
  const auto size_option = [](CLI::App* cmd, int& n, int max) {
    cmd->add_option("--n", n, "Tableau size")->required()->check(CLI::Range(1, max));
  };

  CountOptions count;
  auto* c_count = app.add_subcommand("count", "Partition function: closed form and, for small n, brute force");
  size_option(c_count, count.n, 100000);
  c_count->add_flag("--four", count.four, "Use the four-parameter weights alpha, beta, gamma, delta");
  c_count->add_option("--alpha", count.alpha, "alpha as p/q")->capture_default_str();
  c_count->add_option("--beta", count.beta, "beta as p/q")->capture_default_str();
  c_count->add_option("--gamma", count.gamma, "gamma as p/q (with --four)")->capture_default_str();
  c_count->add_option("--delta", count.delta, "delta as p/q (with --four)")->capture_default_str();
  c_count->callback([&] {
    if (!count.four && (c_count->count("--gamma") || c_count->count("--delta"))) {
      throw UsageError("--gamma and --delta require --four");
    }
    action = [&] { return run_count(count, json, out); };
  });

  ProbOptions prob;
  auto* c_prob = app.add_subcommand("prob", "Law of one box: formula, counting engine and enumeration");
  size_option(c_prob, prob.n, 100000);
  prob.w.add(c_prob);
  c_prob->add_option("--box", prob.box, "Box as i,j")->required()->delimiter(',')->expected(2);
  c_prob->callback([&] { action = [&] { return run_prob(prob, json, out); }; });

  JointOptions joint;
  auto* c_joint = app.add_subcommand("joint", "Joint diagonal events: formula or main term, counting engine, enumeration");
  size_option(c_joint, joint.n, 100000);
  joint.w.add(c_joint);
  c_joint->add_option("--diag", joint.diag, "Diagonal 2 or 3")->required()->check(CLI::IsMember({2, 3}));
  c_joint->add_option("--kind", joint.kind, "alpha, beta or nonempty")->required();
  c_joint->add_option("--cols", joint.cols, "Increasing columns j1,j2,...")->required();
  c_joint->callback([&] { action = [&] { return run_joint(joint, json, out); }; });

  MomentsOptions moments;
  auto* c_moments = app.add_subcommand("moments", "Factorial moments E(Y)_r of a diagonal statistic");
  size_option(c_moments, moments.n, 100000);
  moments.w.add(c_moments);
  c_moments->add_option("--stat", moments.stat, "A2, B2, X2, A3, B3 or X3")->required();
  c_moments->add_option("--r", moments.r, "Largest order")->check(CLI::Range(0, 64))->capture_default_str();
  c_moments->add_option("--mode", moments.mode, "auto, formula, exact_dp or main_term")->capture_default_str();
  c_moments->callback([&] { action = [&] { return run_moments(moments, json, out); }; });

  PmfOptions pmf;
  auto* c_pmf = app.add_subcommand("pmf", "Exact law of a statistic");
  size_option(c_pmf, pmf.n, 100000);
  pmf.w.add(c_pmf);
  c_pmf->add_option("--stat", pmf.stat, "A2, B2, X2, A3, B3, X3, NA or NB")->required();
  c_pmf->add_option("--source", pmf.source, "exact, dp or oracle")->capture_default_str();
  c_pmf->callback([&] { action = [&] { return run_pmf(pmf, json, out); }; });

  ConvergeOptions converge;
  auto* c_converge = app.add_subcommand("converge", "Moments and distance to the Poisson limit over sizes");
  c_converge->add_option("--stat", converge.stat, "A2, B2, X2, A3, B3 or X3")->required();
  c_converge->add_option("--ns", converge.ns, "Sizes n1,n2,...")->required()->delimiter(',')->check(
      CLI::PositiveNumber);
  converge.w.add(c_converge);
  c_converge->add_option("--lambda", converge.lambda, "Poisson mean (defaults to the limit for the statistic)");
  c_converge->callback([&] { action = [&] { return run_converge(converge, json, out); }; });

  SampleOptions smp;
  auto* c_sample = app.add_subcommand("sample", "Exact random tableaux");
  size_option(c_sample, smp.n, kMaxDpSize);
  smp.w.add(c_sample);
  c_sample->add_option("--four", smp.four, "Four-parameter weights alpha,beta,gamma,delta (replaces --a/--b)");
  c_sample->add_option("--count", smp.count, "Number of tableaux")->capture_default_str();
  c_sample->add_option("--seed", smp.seed, "Seed of the random stream (required)");
  c_sample->add_option("--method", smp.method, "enum_alias or chain_rule")->capture_default_str();
  c_sample->callback([&] {
    if (!smp.four.empty() && (c_sample->count("--a") || c_sample->count("--b"))) {
      throw UsageError("--four replaces --a and --b");
    }
    action = [&] { return run_sample(smp, json, out); };
  });

  AsepOptions asep;
  auto* c_asep = app.add_subcommand("asep-verify", "Compare tableaux and Markov-chain steady states");
  size_option(c_asep, asep.n, 6);
  c_asep->add_option("--rates", asep.rates, "alpha,beta,gamma,delta,q,u")->capture_default_str();
  c_asep->add_option("--convention", asep.convention, "both, alpha_gamma or alpha_delta")->capture_default_str();
  c_asep->callback([&] { action = [&] { return run_asep(asep, json, out); }; });

  int selftest_n = 5;
  auto* c_selftest = app.add_subcommand("selftest", "Check every method against exhaustive enumeration");
  c_selftest->add_option("--max-n", selftest_n, "Largest tableau size checked")
      ->check(CLI::Range(kSelftestMinSize, kSelftestMaxSize))
      ->capture_default_str();
  c_selftest->callback([&] { action = [&] { return run_selftest_command(selftest_n, json, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace staircase::cli
