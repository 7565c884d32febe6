#include "auctionlab/cli.hpp"

#include <CLI11.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "auctionlab/error.hpp"
#include "auctionlab/harness.hpp"
#include "auctionlab/marginals.hpp"
#include "auctionlab/position_randomized.hpp"
#include "auctionlab/report_io.hpp"
#include "auctionlab/samplers.hpp"
#include "auctionlab/sequential.hpp"

namespace auctionlab::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string mode;
  std::string adversary;
  int n = 0;
  int k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::vector<std::string> bids;
  std::vector<std::string> sizes;
  std::string format = "json";
  std::string config;
  std::string out;
  std::string suite;
  int points = 11;
};

struct Flags {
  CLI::Option* mode = nullptr;
  CLI::Option* adversary = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* bids = nullptr;
  CLI::Option* sizes = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

std::vector<Rational> parse_list(const std::vector<std::string>& items, const char* what) {
  std::vector<Rational> out;
  for (const std::string& s : items) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::invalid_argument&) {
      throw AuctionError(ErrorCode::kInvalidScenario,
                         std::string("cannot parse ") + what + " value '" + s + "'");
    }
  }
  return out;
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("AUCTIONLAB_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw AuctionError(ErrorCode::kInvalidScenario,
                       std::string("AUCTIONLAB_SEED is not an unsigned integer: ") + raw);
  }
}

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AuctionError(ErrorCode::kInvalidScenario, "cannot open config '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw AuctionError(ErrorCode::kInvalidScenario, "config '" + path + "': " + e.what());
  }
}

// Precedence: command-line flag, then config file, then AUCTIONLAB_SEED (seed
// only), then built-in defaults.
Scenario build_scenario(Options& o, const Flags& f, std::optional<Mode> forced_mode) {
  Scenario s;
  s.seed = env_seed().value_or(0);
  if (!o.config.empty()) {
    const json doc = read_config(o.config);
    s = scenario_from_json(doc, s);
    if (!given(f.format) && doc.contains("format")) o.format = doc.at("format").get<std::string>();
    if (!given(f.out) && doc.contains("out")) o.out = doc.at("out").get<std::string>();
  }
  if (given(f.mode)) s.mode = parse_mode(o.mode);
  if (forced_mode) s.mode = *forced_mode;
  if (given(f.adversary)) s.adversary = parse_adversary(o.adversary);
  if (given(f.n)) s.n = o.n;
  if (given(f.k)) s.k = o.k;
  if (given(f.samples)) s.samples = o.samples;
  if (given(f.seed)) s.seed = o.seed;
  if (given(f.threads)) s.threads = o.threads;
  if (given(f.bids)) s.fixed_bids = parse_list(o.bids, "bid");
  if (given(f.sizes)) s.group_sizes = parse_list(o.sizes, "size");
  return s;
}

void emit(const Options& o, const std::string& body, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write '" + o.out + "'");
  file << body;
  err << "wrote " << o.out << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// --- verify suites -------------------------------------------------------

struct Check {
  std::string name;
  std::string value;
  std::string expected;
  bool passed = false;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::vector<Check> verify_marginals(const Scenario& base) {
  Scenario s = base;
  s.mode = s.k == 2 ? Mode::kTwoBidder : Mode::kKBidder;
  s.adversary = AdversaryKind::kCopycat;
  const Report r = estimate(s);
  std::vector<Check> checks;
  for (const KsEntry& e : r.ks) {
    checks.push_back(Check{"ks b" + std::to_string(e.coordinate), fmt(e.statistic),
                           "<= " + fmt(e.threshold), e.passed()});
  }
  checks.push_back(Check{"max |sum - 1|", fmt(r.max_sum_deviation), "<= 1e-12",
                         r.max_sum_deviation <= kSumTolerance});
  checks.push_back(Check{"zero-sum violations", std::to_string(r.zero_sum_violations), "0",
                         r.zero_sum_violations == 0});
  return checks;
}

// r_closed against adaptive quadrature of h over z, and the closed form's
// own marginal integrals.
std::vector<Check> verify_density() {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr double third = 1.0 / 3.0;
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double x = i / 33.0;
      const double y = j / 33.0 - 0.005;
      const auto h = [&](double z) { return density_h(x, y, z); };
      const double lo = std::min(x, y);
      const double hi = std::max(x, y);
      const double q = GK::integrate(h, 0.0, lo, 15, 1e-12) + GK::integrate(h, lo, hi, 15, 1e-12) +
                       GK::integrate(h, hi, third, 15, 1e-12);
      worst = std::max(worst, std::abs(q - r_closed(x, y)));
    }
  }
  std::vector<Check> checks{Check{"max |r_closed - quadrature| (100 points)", fmt(worst),
                                  "<= 1e-9", worst <= 1e-9}};
  const double total = GK::integrate(
      [&](double x) {
        return GK::integrate([&](double y) { return r_closed(x, y); }, 0.0, x, 15, 1e-10) +
               GK::integrate([&](double y) { return r_closed(x, y); }, x, third, 15, 1e-10);
      },
      0.0, third, 15, 1e-9);
  checks.push_back(Check{"integral of r over the square", fmt(total), "1 +- 1e-3",
                         std::abs(total - 1.0) <= 1e-3});
  return checks;
}

std::vector<Check> verify_position(std::optional<std::pair<int, int>> only) {
  std::vector<std::pair<int, int>> cases;
  if (only) {
    cases.push_back(*only);
  } else {
    for (int k = 2; k <= 5; ++k) {
      for (int n = k; n <= 12; ++n) cases.emplace_back(n, k);
    }
  }
  std::vector<Check> checks;
  for (auto [n, k] : cases) {
    const CSequence c = c_sequence(n, k);
    const BestResponse br = best_response(n, k);
    const Rational bound = Rational(c.beta - 1) / rational_pow(Rational(n), static_cast<unsigned>(k - 1));
    const Rational undercut =
        expected_wins_perm(k, undercut_strategy(c.as_bids()), c.as_bids(),
                           PermutationMarginals::identity(n), PermutationMarginals::uniform(n));
    checks.push_back(Check{"best response n=" + std::to_string(n) + " k=" + std::to_string(k),
                           to_string(br.value), to_string(bound),
                           br.value == bound && undercut == bound});
  }
  return checks;
}

std::vector<Check> verify_sharp_p(std::optional<std::pair<int, int>> only) {
  std::vector<std::pair<int, int>> cases;
  if (only) {
    cases.push_back(*only);
  } else {
    for (int k = 2; k <= 4; ++k) {
      for (int n = k; n <= 6; ++n) cases.emplace_back(n, k);
    }
  }
  std::vector<Check> checks;
  for (auto [n, k] : cases) {
    bool ok = true;
    Rational total(0);
    for (int p = 1; p <= n; ++p) {
      const Rational v = sharp_p(n, k, p);
      const Rational closed =
          (rational_pow(Rational(p), static_cast<unsigned>(k)) -
           rational_pow(Rational(p - 1), static_cast<unsigned>(k))) /
          (k * rational_pow(Rational(n), static_cast<unsigned>(k - 1)));
      ok = ok && v == closed;
      total += v;
    }
    checks.push_back(Check{"sharp-p n=" + std::to_string(n) + " k=" + std::to_string(k),
                           "sum " + to_string(total), to_string(Rational(n) / k),
                           ok && total == Rational(n) / k});
  }
  return checks;
}

std::vector<Check> verify_sequential(const Scenario& s) {
  const Rational fair = Rational(s.n) / s.k;
  std::vector<Strategy> lineup{steady_strategy(s.n, s.k)};
  for (int j = 1; j < s.k; ++j) lineup.push_back(random_strategy(s.n, s.k));
  RngStream rng(s.seed, 0);
  Rational worst = Rational(s.n);
  for (std::size_t run = 0; run < s.samples; ++run) {
    worst = std::min(worst, run_sequential_sampled(lineup, s.n, rng).wins[0]);
  }
  return {Check{"steady vs " + std::to_string(s.samples) + " random opponent runs (min wins)",
                to_string(worst), ">= " + to_string(fair), worst >= fair}};
}

std::string render_checks(const std::string& suite, const std::vector<Check>& checks,
                          const std::string& format) {
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (format == "csv") {
    std::ostringstream os;
    os << "check,value,expected,passed\n";
    for (const Check& c : checks) {
      os << csv_escape(c.name) << ',' << csv_escape(c.value) << ',' << csv_escape(c.expected) << ','
         << (c.passed ? "true" : "false") << '\n';
    }
    return os.str();
  }
  json rows = json::array();
  for (const Check& c : checks) {
    rows.push_back(json{{"name", c.name}, {"value", c.value}, {"expected", c.expected}, {"passed", c.passed}});
  }
  return json{{"suite", suite}, {"passed", all}, {"checks", rows}}.dump(2) + "\n";
}

// --- other subcommands ---------------------------------------------------

std::string render_report(const Report& r, const std::string& format) {
  if (format == "csv") return report_to_csv(r);
  return report_to_json(r).dump(2) + "\n";
}

std::string render_best_response(int n, int k, const std::string& format) {
  const CSequence c = c_sequence(n, k);
  const BestResponse br = best_response(n, k);
  if (format == "csv") {
    std::ostringstream os;
    os << "item,num,den,eps\n";
    os << "value," << numerator_string(br.value) << ',' << denominator_string(br.value) << ",0\n";
    for (const Bid& b : br.witness) {
      os << "bid," << numerator_string(b.base) << ',' << denominator_string(b.base) << ',' << b.eps
         << '\n';
    }
    return os.str();
  }
  json witness = json::array();
  for (std::size_t i = 0; i < br.witness.size(); ++i) {
    const Bid& b = br.witness[i];
    witness.push_back(json{{"bid", b.to_string()},
                           {"c_index", br.witness_index[i]},
                           {"base", rational_to_json(b.base)},
                           {"eps", b.eps}});
  }
  json cs = json::array();
  for (const Rational& v : c.c) cs.push_back(rational_to_json(v));
  return json{{"n", n},
              {"k", k},
              {"beta", c.beta},
              {"c", cs},
              {"value", rational_to_json(br.value)},
              {"value_text", to_string(br.value)},
              {"witness", witness}}
             .dump(2) +
         "\n";
}

std::string render_marginals(int n, int k, int points, const std::string& format) {
  const MarginalSpec spec(n, k);
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) grid.push_back(spec.cap() * i / (points - 1));
  if (format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "b,cdf,pdf\n";
    for (double b : grid) os << b << ',' << cdf_F(spec, b) << ',' << pdf_f(spec, b) << '\n';
    return os.str();
  }
  json rows = json::array();
  for (double b : grid) {
    const double pdf = pdf_f(spec, b);
    rows.push_back(json{{"b", b}, {"cdf", cdf_F(spec, b)}, {"pdf", std::isinf(pdf) ? json("inf") : json(pdf)}});
  }
  return json{{"n", n}, {"k", k}, {"cap", rational_to_json(Rational(k) / n)}, {"grid", rows}}.dump(2) + "\n";
}

void add_scenario_flags(CLI::App* sub, Options& o, Flags& f, bool with_mode) {
  if (with_mode) {
    f.mode = sub->add_option("--mode", o.mode,
                             "two-bidder | k-bidder | position-randomized | sequential | group");
  }
  f.adversary = sub->add_option("--adversary", o.adversary, "fixed | copycat | undercut | dp-optimal");
  f.n = sub->add_option("--n", o.n, "number of objects");
  f.k = sub->add_option("--k", o.k, "number of bidders");
  f.samples = sub->add_option("--samples", o.samples, "Monte Carlo draws");
  f.seed = sub->add_option("--seed", o.seed, "RNG seed (default: AUCTIONLAB_SEED or 0)");
  f.threads = sub->add_option("--threads", o.threads, "worker threads, 0 = all cores");
  f.bids = sub->add_option("--bids", o.bids, "fixed adversary bids, e.g. 1/5,1/5 or 0.2,0.2")
               ->delimiter(',');
  f.sizes = sub->add_option("--sizes", o.sizes, "group sizes (group mode)")->delimiter(',');
  sub->add_option("--config", o.config, "JSON scenario document; flags override it");
}

void add_output_flags(CLI::App* sub, Options& o, Flags& f) {
  f.format = sub->add_option("--format", o.format, "json | csv")
                 ->check(CLI::IsMember({"json", "csv"}));
  f.out = sub->add_option("--out", o.out, "write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Budget-constrained multi-object auction simulator"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::ostringstream keys;
  for (const char* key : kScenarioKeys) keys << ' ' << key;
  app.footer("Config documents are JSON objects with keys:" + keys.str());

  Options o;
  Flags simulate_flags;
  Flags sequential_flags;
  Flags verify_flags;
  Flags plain_flags;

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of a scenario");
  add_scenario_flags(simulate, o, simulate_flags, true);
  add_output_flags(simulate, o, simulate_flags);

  CLI::App* sequential = app.add_subcommand("sequential", "steady k/n bidder in sequential auctions");
  add_scenario_flags(sequential, o, sequential_flags, false);
  add_output_flags(sequential, o, sequential_flags);

  CLI::App* best = app.add_subcommand("best-response", "exact adversary optimum vs the c-sequence");
  best->add_option("--n", o.n, "number of objects")->required();
  best->add_option("--k", o.k, "number of bidders")->required();
  add_output_flags(best, o, plain_flags);

  CLI::App* marg = app.add_subcommand("marginals", "evaluate F_k and its density on a grid");
  marg->add_option("--n", o.n, "number of objects")->required();
  marg->add_option("--k", o.k, "number of bidders")->required();
  marg->add_option("--points", o.points, "grid points on [0, k/n]")->check(CLI::Range(2, 100000));
  add_output_flags(marg, o, plain_flags);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", o.suite, "marginals | density | position | sharp-p | sequential")
      ->required()
      ->check(CLI::IsMember({"marginals", "density", "position", "sharp-p", "sequential"}));
  verify_flags.n = verify->add_option("--n", o.n, "number of objects");
  verify_flags.k = verify->add_option("--k", o.k, "number of bidders");
  verify_flags.samples = verify->add_option("--samples", o.samples, "draws or runs");
  verify_flags.seed = verify->add_option("--seed", o.seed, "RNG seed");
  verify_flags.threads = verify->add_option("--threads", o.threads, "worker threads");
  add_output_flags(verify, o, verify_flags);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (simulate->parsed() || sequential->parsed()) {
      const bool seq = sequential->parsed();
      Flags& f = seq ? sequential_flags : simulate_flags;
      Scenario s = build_scenario(o, f, seq ? std::optional(Mode::kSequential) : std::nullopt);
      if (seq && !given(f.adversary) && s.fixed_bids.empty()) s.adversary = AdversaryKind::kCopycat;
      validate(s);
      err << to_string(s.mode) << ": n=" << s.n << " k=" << s.k << " adversary="
          << to_string(s.adversary) << " samples=" << s.samples << " seed=" << s.seed << '\n';
      const Report r = estimate(s);
      err << "done in " << fmt(r.meta.elapsed_ms) << " ms\n";
      emit(o, render_report(r, o.format), out, err);
      return kOk;
    }
    if (best->parsed()) {
      emit(o, render_best_response(o.n, o.k, o.format), out, err);
      return kOk;
    }
    if (marg->parsed()) {
      emit(o, render_marginals(o.n, o.k, o.points, o.format), out, err);
      return kOk;
    }
    // verify
    Scenario s;
    s.seed = env_seed().value_or(0);
    s.n = given(verify_flags.n) ? o.n : 4;
    s.k = given(verify_flags.k) ? o.k : 2;
    if (given(verify_flags.seed)) s.seed = o.seed;
    if (given(verify_flags.threads)) s.threads = o.threads;
    std::optional<std::pair<int, int>> only;
    if (given(verify_flags.n) || given(verify_flags.k)) only = std::pair{s.n, s.k};
    std::vector<Check> checks;
    if (o.suite == "marginals") {
      s.samples = given(verify_flags.samples) ? o.samples : kDefaultSamples;
      checks = verify_marginals(s);
    } else if (o.suite == "density") {
      checks = verify_density();
    } else if (o.suite == "position") {
      checks = verify_position(only);
    } else if (o.suite == "sharp-p") {
      checks = verify_sharp_p(only);
    } else {
      s.samples = given(verify_flags.samples) ? o.samples : 10'000;
      checks = verify_sequential(s);
    }
    const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    emit(o, render_checks(o.suite, checks, o.format), out, err);
    err << "verify " << o.suite << ": " << (all ? "all checks passed" : "FAILED") << '\n';
    return all ? kOk : kValidationError;
  } catch (const AuctionError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace auctionlab::cli
