// Release gate: seven end-to-end checks with pinned tolerances, one
// pass/fail line each. Exit code 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qsim/checks.hpp"
#include "qsim/errors.hpp"
#include "qsim/lower_bound.hpp"
#include "qsim/oracle.hpp"
#include "qsim/policies.hpp"
#include "qsim/random_instance.hpp"

using namespace qsim;

namespace {

using Clock = std::chrono::steady_clock;

bool g_all_pass = true;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report_line(int criterion, const std::string& what, bool pass, double secs) {
  std::printf("[%s] criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), secs);
  g_all_pass = g_all_pass && pass;
}

void report(int criterion, const std::string& what, bool pass, Clock::time_point start) {
  report_line(criterion, what, pass, seconds_since(start));
}

SwitchConfig adversarial_config() {
  SwitchConfig c;
  c.m = 2;
  c.values = {1, 2};
  c.caps = {1, 2};
  return c;
}

// Criterion 1: exact benefits on the m=2 adversarial instance.
void criterion_exactness() {
  auto start = Clock::now();
  SwitchConfig config = adversarial_config();
  EventSequence seq = generate_lower_bound_sequence(config);

  bool ok = true;
  ok = ok && run_greedy(config, seq).benefit() == Rational(5);
  ok = ok && run(config, seq, adv_schedule(config)).benefit() == Rational(7);
  OptResult opt = brute_force_opt(config, seq);
  ok = ok && opt.benefit == Rational(7);
  BenefitReport report_ = competitive_report(config, seq);
  ok = ok && report_.ratio == Rational(7, 5);
  ok = ok && greedy_benefit_closed_form(config) == Rational(5);
  ok = ok && adv_benefit_closed_form(config) == Rational(7);
  report(1, "adversarial instance benefits are exactly 5 / 7 / 7, ratio 7/5", ok, start);
}

// Criterion 2: the closed-form ratio climbs to the bound as the fat queue grows.
void criterion_limit() {
  auto start = Clock::now();
  std::vector<Rational> values{1, 2};
  Rational bound(3, 2);

  bool ok = true;
  ok = ok && ratio_limit_demo(values, 1, 1) == Rational(4, 3);
  ok = ok && ratio_limit_demo(values, 1, 10) == Rational(31, 21);
  ok = ok && ratio_limit_demo(values, 1, 100) == Rational(301, 201);
  Rational at_ten_k = ratio_limit_demo(values, 1, 10000);
  ok = ok && at_ten_k == Rational(30001, 20001);
  ok = ok && bound - at_ten_k < Rational(1, 10000);

  Rational prev = 0;
  for (int k : {1, 10, 100, 10000}) {
    Rational q = ratio_limit_demo(values, 1, k);
    ok = ok && prev <= q && q <= bound;
    prev = q;
  }
  report(2, "ratio 30001/20001 at K=1e4, within 1e-4 of 3/2, monotone in K", ok, start);
}

struct SweepOutcome {
  int bound_violations = 0;
  int above_one = 0;
  int lemma_violations = 0;
  int ratio_vacuous = 0;
  int oracle_checked = 0;
  int oracle_mismatches = 0;
};

// Criteria 3, 4, 7 share one pass over the 10,000-instance sweep.
SweepOutcome run_sweep() {
  SweepOutcome out;
  RandomBounds bounds;  // m in [2,4], caps in [1,3], up to 18 events
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    Instance inst = random_instance(seed, bounds);
    Transcript greedy_t = run_greedy(inst.config, inst.sequence);
    OptResult opt = brute_force_opt(inst.config, inst.sequence);

    Rational greedy_benefit = greedy_t.benefit();
    Rational ratio = greedy_benefit.is_zero() ? Rational(1) : opt.benefit / greedy_benefit;
    if (inst.config.competitive_bound() < ratio) {
      ++out.bound_violations;
    }
    if (Rational(1) < ratio) {
      ++out.above_one;
    }

    Verdict checks[] = {
        check_top_class_acceptance(greedy_t.accepted, opt),
        check_suffix_acceptance_bound(greedy_t.accepted, opt.accepted),
        check_weighted_acceptance_bound(greedy_t.accepted, opt.accepted, inst.config.values),
        check_adjacent_value_ratio(greedy_t.accepted, inst.config.values),
    };
    for (const Verdict& v : checks) {
      if (!v.pass && !v.vacuous) {
        ++out.lemma_violations;
        std::fprintf(stderr, "  seed %llu: %s -- %s\n",
                     static_cast<unsigned long long>(seed), v.check.c_str(), v.detail.c_str());
      }
      if (v.vacuous && v.check == "adjacent-value-ratio") {
        ++out.ratio_vacuous;
      }
    }

    if (inst.sequence.size() <= 10) {
      ++out.oracle_checked;
      if (relaxed_opt_benefit(inst.config, inst.sequence) != opt.benefit) {
        ++out.oracle_mismatches;
      }
    }
  }
  return out;
}

// Criterion 5: per-event suite over the 1,000-instance subsample.
void criterion_per_event() {
  auto start = Clock::now();
  RandomBounds bounds;
  int violations = 0;
  int instances = 0;
  for (std::uint64_t seed = 0; seed < 10000; seed += 10) {
    ++instances;
    Instance inst = random_instance(seed, bounds);
    EventSequence drained = with_drain(inst.config, inst.sequence);
    Transcript greedy_t = run_greedy(inst.config, drained);
    OptResult opt = brute_force_opt(inst.config, drained);
    Transcript witness = optimal_transcript(inst.config, drained, opt);
    for (const Verdict& v : ledger_suite(greedy_t, witness)) {
      if (!v.pass && !v.vacuous) {
        ++violations;
        std::fprintf(stderr, "  seed %llu: %s -- %s\n",
                     static_cast<unsigned long long>(seed), v.check.c_str(), v.detail.c_str());
      }
    }
  }
  report(5,
         "per-event suite (exchange bound, send budget, surplus, quiescence) over " +
             std::to_string(instances) + " instances: " + std::to_string(violations) +
             " violations",
         violations == 0 && instances == 1000, start);
}

// Criterion 6: the m=2 adversarial family leaves zero slack, so none of the
// checkers is vacuously loose.
void criterion_tightness() {
  auto start = Clock::now();
  SwitchConfig config = adversarial_config();
  EventSequence seq = generate_lower_bound_sequence(config);
  Transcript greedy_t = run_greedy(config, seq);
  OptResult opt = brute_force_opt(config, seq);
  Transcript witness = optimal_transcript(config, seq, opt);
  Transcript adv_t = run(config, seq, adv_schedule(config));

  bool ok = true;
  Verdict suffix = check_suffix_acceptance_bound(greedy_t.accepted, opt.accepted);
  ok = ok && suffix.pass && suffix.slack == Rational(0);
  Verdict weighted =
      check_weighted_acceptance_bound(greedy_t.accepted, opt.accepted, config.values);
  ok = ok && weighted.pass && weighted.slack == Rational(0);
  Verdict ratio = check_adjacent_value_ratio(greedy_t.accepted, config.values);
  ok = ok && ratio.pass && ratio.slack == Rational(0);

  for (const Transcript* ref : {&witness, &adv_t}) {
    bool send_budget_tight = false;
    bool surplus_tight = false;
    for (const Verdict& v : ledger_suite(greedy_t, *ref)) {
      ok = ok && (v.pass || v.vacuous);
      if (v.check == "send-budget" && v.pass && v.slack == Rational(0)) {
        send_budget_tight = true;
      }
      if (v.check == "interval-surplus" && v.pass && v.slack == Rational(0)) {
        surplus_tight = true;
      }
    }
    ok = ok && send_budget_tight && surplus_tight;
  }
  report(6, "zero slack in suffix, weighted, ratio, send-budget and surplus checks", ok,
         start);
}

}  // namespace

int main() {
  criterion_exactness();
  criterion_limit();

  auto sweep_start = Clock::now();
  SweepOutcome sweep = run_sweep();
  double sweep_secs = seconds_since(sweep_start);
  report_line(3,
              "10000-instance sweep: " + std::to_string(sweep.bound_violations) +
                  " bound violations, " + std::to_string(sweep.above_one) +
                  " ratios above 1",
              sweep.bound_violations == 0 && sweep.above_one > 0, sweep_secs);
  report_line(4,
              "acceptance-count checks over the sweep: " +
                  std::to_string(sweep.lemma_violations) + " violations (" +
                  std::to_string(sweep.ratio_vacuous) + " vacuous ratio cases)",
              sweep.lemma_violations == 0, sweep_secs);

  criterion_per_event();
  criterion_tightness();

  report_line(7,
              "diligent oracle vs idle-permitting enumeration on " +
                  std::to_string(sweep.oracle_checked) + " small instances: " +
                  std::to_string(sweep.oracle_mismatches) + " mismatches",
              sweep.oracle_checked > 0 && sweep.oracle_mismatches == 0, sweep_secs);

  return g_all_pass ? 0 : 1;
}
