// Command-line front end: simulate event sequences, emit adversarial
// instances with their closed-form benefits, and drive the verification
// sweep. Reports render as text, JSON (stable key order) or CSV.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qsim/checks.hpp"
#include "qsim/errors.hpp"
#include "qsim/lower_bound.hpp"
#include "qsim/oracle.hpp"
#include "qsim/policies.hpp"
#include "qsim/random_instance.hpp"
#include "qsim/report.hpp"
#include "qsim/sequence_io.hpp"
#include "qsim/version.hpp"

using namespace qsim;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitSimulation = 3;
constexpr int kExitBudget = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += argv[i];
  }
  return out;
}

std::string g_command_line;

std::size_t oracle_budget_from_env() {
  const char* env = std::getenv("QSIM_ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') {
    return kDefaultOracleBudget;
  }
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (...) {
    std::cerr << "warning: ignoring unparsable QSIM_ORACLE_BUDGET='" << env << "'\n";
    return kDefaultOracleBudget;
  }
}

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    out.push_back(Rational::parse(tok));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    out.push_back(std::stoi(tok));
  }
  return out;
}

// "2..4" or "3"
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

Json instance_json(const std::string& source, const SwitchConfig& config,
                   const EventSequence& seq) {
  return Json{{"source", source}, {"config", to_json(config)}, {"events", seq.size()}};
}

Json report_header() {
  return Json{{"version", kToolVersion}, {"command", g_command_line}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::string& input, const std::string& policy, bool drain,
                 bool as_json, bool as_csv, bool timings) {
  auto start = Clock::now();
  SwitchConfig config;
  EventSequence seq;
  try {
    std::tie(config, seq) = load_instance(input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (drain) {
    seq = with_drain(config, seq);
  }

  std::size_t budget = oracle_budget_from_env();
  Transcript t;
  try {
    if (policy == "greedy") {
      t = run_greedy(config, seq);
    } else if (policy == "adv") {
      t = run(config, seq, adv_schedule(config));
    } else {  // opt-witness
      OptResult opt = brute_force_opt(config, seq, budget);
      t = optimal_transcript(config, seq, opt);
    }
  } catch (const Error& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? kExitBudget : kExitSimulation;
  }

  if (as_json) {
    Json j = report_header();
    j["instance"] = instance_json("file:" + input, config, seq);
    j["policy"] = policy;
    j["transcript"] = to_json(t);
    if (timings) {
      j["timings"] = Json{{"wall_s", seconds_since(start)}};
    }
    emit(j);
  } else if (as_csv) {
    std::cout << "policy,events,benefit,transmitted_value,idle_sends\n"
              << policy << ',' << t.entries.size() << ',' << t.benefit().decimal() << ','
              << t.transmitted_value().decimal() << ',' << t.idle_sends << "\n";
  } else {
    std::cout << "policy:      " << policy << "\n";
    std::cout << "events:      " << t.entries.size() << "\n";
    std::cout << "accepted:   ";
    for (int a : t.accepted) {
      std::cout << ' ' << a;
    }
    std::cout << "\nsent:       ";
    for (int s : t.sent) {
      std::cout << ' ' << s;
    }
    std::cout << "\nidle sends:  " << t.idle_sends << "\n";
    std::cout << "benefit:     " << t.benefit().str() << " (" << t.benefit().decimal()
              << ")\n";
    std::cout << "transmitted: " << t.transmitted_value().str() << " ("
              << t.transmitted_value().decimal() << ")\n";
  }
  std::cerr << "done in " << seconds_since(start) << " s\n";
  return 0;
}

// -------------------------------------------------------------- lowerbound

int cmd_lowerbound(const std::string& values_text, const std::string& caps_text, int ell,
                   long long cap_k, const std::string& emit_seq, bool with_oracle,
                   bool as_json, bool timings) {
  auto start = Clock::now();
  SwitchConfig config;
  try {
    std::vector<Rational> values = parse_value_list(values_text);
    if (!caps_text.empty()) {
      config.m = static_cast<int>(values.size());
      config.values = values;
      config.caps = parse_int_list(caps_text);
      validate_config(config);
    } else {
      if (ell <= 0 || cap_k <= 0) {
        throw Error(Errc::degenerate_config, "need --caps or both --ell and --K");
      }
      if (cap_k > 1000000) {
        throw Error(Errc::budget_exceeded, "K above 1e6 is not simulable here");
      }
      config = limit_config(values, ell, static_cast<int>(cap_k));
      // --ell/--K also pins the demo precondition
      ratio_limit_demo(values, ell, static_cast<int>(cap_k));
    }
    if (config.m < 2) {
      throw Error(Errc::degenerate_config, "construction needs m >= 2");
    }
  } catch (const Error& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitParse;
  }

  EventSequence seq = generate_lower_bound_sequence(config);
  if (!emit_seq.empty()) {
    save_instance(emit_seq, config, seq);
  }

  Rational greedy_cf = greedy_benefit_closed_form(config);
  Rational adv_cf = adv_benefit_closed_form(config);
  Rational ratio = adv_cf / greedy_cf;
  Rational bound = config.competitive_bound();
  Rational gap = bound - ratio;

  // closed forms double-checked by simulation
  Rational greedy_sim = run_greedy(config, seq).benefit();
  Rational adv_sim = run(config, seq, adv_schedule(config)).benefit();
  if (greedy_sim != greedy_cf || adv_sim != adv_cf) {
    std::cerr << "internal error: simulation disagrees with closed forms\n";
    return kExitSimulation;
  }

  std::optional<Rational> opt_benefit;
  if (with_oracle) {
    try {
      opt_benefit = brute_force_opt(config, seq, oracle_budget_from_env()).benefit;
    } catch (const Error& e) {
      std::cerr << "oracle error: " << e.what() << "\n";
      return e.code() == Errc::budget_exceeded ? kExitBudget : kExitSimulation;
    }
  }

  if (as_json) {
    Json j = report_header();
    j["instance"] = instance_json("generated:adversarial", config, seq);
    j["greedy_benefit"] = to_json(greedy_cf);
    j["adv_benefit"] = to_json(adv_cf);
    if (opt_benefit) {
      j["opt_benefit"] = to_json(*opt_benefit);
    }
    j["ratio"] = to_json(ratio);
    j["bound"] = to_json(bound);
    j["gap"] = to_json(gap);
    if (!emit_seq.empty()) {
      j["sequence_file"] = emit_seq;
    }
    if (timings) {
      j["timings"] = Json{{"wall_s", seconds_since(start)}};
    }
    emit(j);
  } else {
    std::cout << "events:  " << seq.size() << "\n";
    std::cout << "greedy:  " << greedy_cf.str() << " (" << greedy_cf.decimal() << ")\n";
    std::cout << "adv:     " << adv_cf.str() << " (" << adv_cf.decimal() << ")\n";
    if (opt_benefit) {
      std::cout << "opt:     " << opt_benefit->str() << " (" << opt_benefit->decimal()
                << ")\n";
    }
    std::cout << "ratio:   " << ratio.str() << " (" << ratio.decimal() << ")\n";
    std::cout << "bound:   " << bound.str() << " (" << bound.decimal() << ")\n";
    std::cout << "gap:     " << gap.str() << " (" << gap.decimal() << ")\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct CheckFilter {
  bool all = true;
  std::vector<std::string> names;

  bool enabled(const std::string& name) const {
    if (all) {
      return true;
    }
    for (const std::string& n : names) {
      if (n == name) {
        return true;
      }
    }
    return false;
  }
};

struct SeedResult {
  std::uint64_t seed = 0;
  bool budget_skipped = false;
  bool oracle_checked = false;
  bool ledger_checked = false;
  std::vector<Verdict> verdicts;
  std::string csv;
  Rational ratio;
  bool has_ratio = false;
};

struct VerifyOptions {
  std::uint64_t seeds = 1000;
  std::uint64_t seed_base = 0;
  RandomBounds bounds;
  CheckFilter filter;
  int ledger_stride = 10;
  int jobs = 1;
  bool strict = false;
  bool want_csv = false;
  bool inject_invert = false;
  std::size_t budget = kDefaultOracleBudget;
};

SeedResult verify_one(std::uint64_t seed, const VerifyOptions& opt) {
  SeedResult res;
  res.seed = seed;
  Instance inst = random_instance(seed, opt.bounds);

  Transcript greedy_t = opt.inject_invert
                            ? run(inst.config, inst.sequence, worst_fit_scheduler())
                            : run_greedy(inst.config, inst.sequence);
  OptResult oracle;
  try {
    oracle = brute_force_opt(inst.config, inst.sequence, opt.budget);
  } catch (const Error& e) {
    if (e.code() == Errc::budget_exceeded) {
      res.budget_skipped = true;
      return res;
    }
    throw;
  }

  Rational greedy_benefit = greedy_t.benefit();
  res.ratio = greedy_benefit.is_zero() ? Rational(1) : oracle.benefit / greedy_benefit;
  res.has_ratio = true;
  if (opt.want_csv) {
    BenefitReport br;
    br.ratio = res.ratio;
    br.bound = inst.config.competitive_bound();
    br.slack = br.bound - br.ratio;
    br.within_bound = !br.slack.is_negative();
    res.csv = csv_row(seed, inst.config, br);
  }

  if (opt.filter.enabled("competitive-bound")) {
    Verdict v;
    v.check = "competitive-bound";
    v.slack = inst.config.competitive_bound() - res.ratio;
    v.pass = !v.slack.is_negative();
    if (!v.pass) {
      v.detail = "ratio " + res.ratio.str() + " exceeds bound " +
                 inst.config.competitive_bound().str();
    }
    res.verdicts.push_back(v);
  }
  if (opt.filter.enabled("top-class-acceptance")) {
    res.verdicts.push_back(check_top_class_acceptance(greedy_t.accepted, oracle));
  }
  if (opt.filter.enabled("suffix-acceptance-bound")) {
    res.verdicts.push_back(check_suffix_acceptance_bound(greedy_t.accepted, oracle.accepted));
  }
  if (opt.filter.enabled("weighted-acceptance-bound")) {
    res.verdicts.push_back(
        check_weighted_acceptance_bound(greedy_t.accepted, oracle.accepted, inst.config.values));
  }
  if (opt.filter.enabled("adjacent-value-ratio")) {
    res.verdicts.push_back(check_adjacent_value_ratio(greedy_t.accepted, inst.config.values));
  }

  if (opt.filter.enabled("oracle-cross-check") && inst.sequence.size() <= 10) {
    res.oracle_checked = true;
    Verdict v;
    v.check = "oracle-cross-check";
    Rational relaxed = relaxed_opt_benefit(inst.config, inst.sequence);
    v.pass = relaxed == oracle.benefit;
    if (!v.pass) {
      v.detail = "relaxed enumeration found " + relaxed.str() + ", oracle found " +
                 oracle.benefit.str();
    }
    res.verdicts.push_back(v);
  }

  bool ledger_wanted =
      opt.filter.enabled("exchange-bound") || opt.filter.enabled("send-budget") ||
      opt.filter.enabled("interval-surplus") || opt.filter.enabled("green-interval-quiet");
  if (ledger_wanted && opt.ledger_stride > 0 &&
      seed % static_cast<std::uint64_t>(opt.ledger_stride) == 0) {
    res.ledger_checked = true;
    EventSequence drained = with_drain(inst.config, inst.sequence);
    Transcript greedy_d = opt.inject_invert
                              ? run(inst.config, drained, worst_fit_scheduler())
                              : run_greedy(inst.config, drained);
    OptResult oracle_d = brute_force_opt(inst.config, drained, opt.budget);
    Transcript witness = optimal_transcript(inst.config, drained, oracle_d);
    for (Verdict& v : ledger_suite(greedy_d, witness)) {
      if (opt.filter.enabled(v.check)) {
        res.verdicts.push_back(std::move(v));
      }
    }
  }
  return res;
}

int cmd_verify(const VerifyOptions& opt_in, const std::string& json_path,
               const std::string& csv_path, bool timings, bool quiet) {
  auto start = Clock::now();
  VerifyOptions opt = opt_in;
  opt.want_csv = !csv_path.empty();

  std::vector<SeedResult> results(opt.seeds);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> aborted{false};
  std::string abort_message;
  std::mutex abort_mutex;

  auto worker = [&] {
    while (!aborted.load(std::memory_order_relaxed)) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= opt.seeds) {
        return;
      }
      try {
        results[i] = verify_one(opt.seed_base + i, opt);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(abort_mutex);
        aborted = true;
        abort_message = e.what();
        return;
      }
    }
  };

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }
  if (aborted) {
    std::cerr << "verify aborted: " << abort_message << "\n";
    return kExitSimulation;
  }

  // deterministic aggregation in seed order, independent of job count
  std::vector<Verdict> all;
  std::uint64_t skipped = 0;
  std::uint64_t ledger_checked = 0;
  std::uint64_t oracle_checked = 0;
  std::optional<std::uint64_t> first_violation_seed;
  Rational max_ratio = 0;
  std::optional<std::uint64_t> max_ratio_seed;
  for (const SeedResult& r : results) {
    skipped += r.budget_skipped;
    ledger_checked += r.ledger_checked;
    oracle_checked += r.oracle_checked;
    if (r.has_ratio && (max_ratio_seed == std::nullopt || max_ratio < r.ratio)) {
      max_ratio = r.ratio;
      max_ratio_seed = r.seed;
    }
    for (const Verdict& v : r.verdicts) {
      if (!v.pass && !v.vacuous && first_violation_seed == std::nullopt) {
        first_violation_seed = r.seed;
      }
      all.push_back(v);
    }
  }
  if (opt.strict && skipped > 0) {
    std::cerr << "oracle budget exceeded on " << skipped << " instances (strict mode)\n";
    return kExitBudget;
  }

  std::vector<CheckSummary> sums = summarize(all);
  bool any_fail = false;
  for (const CheckSummary& s : sums) {
    any_fail = any_fail || s.failed > 0;
  }

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    csv << csv_header() << "\n";
    for (const SeedResult& r : results) {
      if (!r.csv.empty()) {
        csv << r.csv << "\n";
      }
    }
  }

  Json j = report_header();
  j["generator"] = Json{{"algorithm", "mt19937_64"},
                        {"seed_base", opt.seed_base},
                        {"seeds", opt.seeds},
                        {"bounds", Json{{"m", {opt.bounds.m_min, opt.bounds.m_max}},
                                        {"caps", {opt.bounds.cap_min, opt.bounds.cap_max}},
                                        {"max_events", opt.bounds.max_events},
                                        {"value_den_max", opt.bounds.value_den_max}}},
                        {"ledger_stride", opt.ledger_stride}};
  j["instances"] = Json{{"total", opt.seeds},
                        {"budget_skipped", skipped},
                        {"ledger_checked", ledger_checked},
                        {"oracle_cross_checked", oracle_checked}};
  Json checks = Json::array();
  for (const CheckSummary& s : sums) {
    checks.push_back(to_json(s));
  }
  j["checks"] = checks;
  if (max_ratio_seed) {
    j["max_ratio"] = to_json(max_ratio);
    j["max_ratio_seed"] = *max_ratio_seed;
  }
  if (first_violation_seed) {
    Instance bad = random_instance(*first_violation_seed, opt.bounds);
    Json violations = Json::array();
    for (const SeedResult& r : results) {
      if (r.seed != *first_violation_seed) {
        continue;
      }
      for (const Verdict& v : r.verdicts) {
        if (!v.pass && !v.vacuous) {
          violations.push_back(to_json(v));
        }
      }
      break;
    }
    j["first_violation"] =
        Json{{"seed", *first_violation_seed},
             {"config", to_json(bad.config)},
             {"sequence", format_instance(bad.config, bad.sequence)},
             {"verdicts", violations}};
  } else {
    j["first_violation"] = nullptr;
  }
  if (timings) {
    j["timings"] = Json{{"wall_s", seconds_since(start)}};
  }

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
  if (!quiet) {
    emit(j);
  }
  std::cerr << "verified " << opt.seeds << " seeds in " << seconds_since(start) << " s\n";
  return any_fail ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_command_line = join_args(argc, argv);

  CLI::App app{"Simulator and verification harness for segregated multi-queue switch "
               "buffer management"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // simulate
  std::string sim_input;
  std::string sim_policy = "greedy";
  bool sim_drain = false;
  bool sim_json = false;
  bool sim_csv = false;
  bool sim_timings = false;
  CLI::App* simulate = app.add_subcommand("simulate", "Run one policy over a sequence file");
  simulate->add_option("--input", sim_input, "instance file")->required();
  simulate->add_option("--policy", sim_policy, "greedy | adv | opt-witness")
      ->check(CLI::IsMember({"greedy", "adv", "opt-witness"}));
  simulate->add_flag("--drain", sim_drain, "append sends that empty every queue");
  simulate->add_flag("--json", sim_json, "JSON report");
  simulate->add_flag("--csv", sim_csv, "CSV summary row");
  simulate->add_flag("--timings", sim_timings, "include wall-clock timing in the report");

  // lowerbound
  std::string lb_values;
  std::string lb_caps;
  int lb_ell = 0;
  long long lb_k = 0;
  std::string lb_emit;
  bool lb_oracle = false;
  bool lb_json = false;
  bool lb_timings = false;
  CLI::App* lowerbound =
      app.add_subcommand("lowerbound", "Generate the adversarial sequence and its benefits");
  lowerbound->add_option("--values", lb_values, "comma-separated packet values")->required();
  lowerbound->add_option("--caps", lb_caps, "comma-separated queue capacities");
  lowerbound->add_option("--ell", lb_ell, "class attaining the max adjacent value ratio");
  lowerbound->add_option("--K", lb_k, "capacity of queue ell+1 (others get 1)");
  lowerbound->add_option("--emit-seq", lb_emit, "write the sequence to this file");
  lowerbound->add_flag("--oracle", lb_oracle, "also run the exact offline search");
  lowerbound->add_flag("--json", lb_json, "JSON report");
  lowerbound->add_flag("--timings", lb_timings, "include wall-clock timing in the report");

  // verify
  VerifyOptions vo;
  vo.budget = oracle_budget_from_env();
  std::string v_m = "2..4";
  std::string v_caps = "1..3";
  std::string v_values_mode = "rational";
  std::string v_checks = "all";
  std::string v_json_path;
  std::string v_csv_path;
  std::string v_inject;
  bool v_timings = false;
  bool v_quiet = false;
  CLI::App* verify = app.add_subcommand("verify", "Randomized sweep over every checker");
  verify->add_option("--seeds", vo.seeds, "number of seeded instances")->required();
  verify->add_option("--seed-base", vo.seed_base, "first seed (default 0)");
  verify->add_option("--m", v_m, "class-count range, e.g. 2..4");
  verify->add_option("--caps", v_caps, "capacity range, e.g. 1..3");
  verify->add_option("--len", vo.bounds.max_events, "max events per sequence");
  verify->add_option("--values", v_values_mode, "rational | integer");
  verify->add_option("--checks", v_checks, "all or comma-separated check names");
  verify->add_option("--ledger-stride", vo.ledger_stride,
                     "run per-event checks on every Nth seed (0 = never)");
  verify->add_option("--jobs", vo.jobs, "worker threads (aggregation stays deterministic)");
  verify->add_flag("--strict", vo.strict, "fail when the oracle budget is exceeded");
  verify->add_option("--json", v_json_path, "write the JSON report here");
  verify->add_option("--csv", v_csv_path, "write per-seed CSV rows here");
  verify->add_option("--inject-bug", v_inject,
                     "negative control; 'invert-greedy' swaps in a lowest-first policy");
  verify->add_flag("--timings", v_timings, "include wall-clock timing in the report");
  verify->add_flag("--quiet", v_quiet, "suppress the JSON report on stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return cmd_simulate(sim_input, sim_policy, sim_drain, sim_json, sim_csv, sim_timings);
    }
    if (lowerbound->parsed()) {
      return cmd_lowerbound(lb_values, lb_caps, lb_ell, lb_k, lb_emit, lb_oracle, lb_json,
                            lb_timings);
    }
    if (verify->parsed()) {
      try {
        std::tie(vo.bounds.m_min, vo.bounds.m_max) = parse_range(v_m);
        std::tie(vo.bounds.cap_min, vo.bounds.cap_max) = parse_range(v_caps);
      } catch (const std::exception&) {
        std::cerr << "invalid range; expected 'a..b' or 'k'\n";
        return kExitParse;
      }
      if (v_values_mode == "integer") {
        vo.bounds.value_den_max = 1;
      } else if (v_values_mode != "rational") {
        std::cerr << "unknown --values mode '" << v_values_mode << "'\n";
        return kExitParse;
      }
      if (v_checks != "all") {
        vo.filter.all = false;
        std::stringstream ss(v_checks);
        std::string name;
        const std::vector<std::string> known{
            "competitive-bound",     "top-class-acceptance", "suffix-acceptance-bound",
            "weighted-acceptance-bound", "adjacent-value-ratio", "oracle-cross-check",
            "green-interval-quiet",  "exchange-bound",       "send-budget",
            "interval-surplus"};
        while (std::getline(ss, name, ',')) {
          bool ok = false;
          for (const std::string& k : known) {
            ok = ok || k == name;
          }
          if (!ok) {
            std::cerr << "unknown check '" << name << "'\n";
            return kExitParse;
          }
          vo.filter.names.push_back(name);
        }
      }
      if (!v_inject.empty()) {
        if (v_inject != "invert-greedy") {
          std::cerr << "unknown --inject-bug mode '" << v_inject << "'\n";
          return kExitParse;
        }
        vo.inject_invert = true;
      }
      return cmd_verify(vo, v_json_path, v_csv_path, v_timings, v_quiet);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? kExitBudget : kExitSimulation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSimulation;
  }
  return 0;
}
