#pragma once

#include <string>
#include <vector>

#include "qsim/intervals.hpp"
#include "qsim/ledger.hpp"
#include "qsim/model.hpp"
#include "qsim/oracle.hpp"
#include "qsim/rational.hpp"

namespace qsim {

// Outcome of one checker on one instance. `slack` is how far the checked
// inequality is from binding (0 = tight); meaningful only when `pass` and
// not `vacuous`.
struct Verdict {
  std::string check;
  bool pass = true;
  bool vacuous = false;
  Rational slack = 0;
  std::string detail;
};

// Per-class accepted arrivals of a run.
std::vector<int> acceptance_counts(const Transcript& t);

// Top class: the canonical optimal witness accepts exactly as many top-class
// packets as greedy; every other diligent schedule (the anti witness and the
// unconstrained maximum) accepts at most as many.
Verdict check_top_class_acceptance(const std::vector<int>& greedy_accepted,
                                   const OptResult& opt);

// For every pivot i in [1, m-1]:
//   sum_{j=i}^{m-1} (opt_j - greedy_j) <= sum_{j=i+1}^{m} greedy_j.
// Slack is the minimum over pivots.
Verdict check_suffix_acceptance_bound(const std::vector<int>& greedy_accepted,
                                      const std::vector<int>& opt_accepted);

// Value-weighted form over the bottom m-1 classes:
//   sum v_j (opt_j - greedy_j) <= sum v_j greedy_{j+1}.
Verdict check_weighted_acceptance_bound(const std::vector<int>& greedy_accepted,
                                        const std::vector<int>& opt_accepted,
                                        const std::vector<Rational>& values);

// sum v_j greedy_{j+1} / sum v_{j+1} greedy_{j+1} <= max adjacent value
// ratio; vacuous when the denominator is zero.
Verdict check_adjacent_value_ratio(const std::vector<int>& greedy_accepted,
                                   const std::vector<Rational>& values);

struct BenefitReport {
  std::vector<int> greedy_accepted;
  std::vector<int> opt_accepted;
  Rational greedy_benefit;
  Rational opt_benefit;
  Rational ratio;                // opt/greedy; 1 when both are zero
  Rational max_adjacent_ratio;   // r
  Rational bound;                // 1 + r
  Rational slack;                // bound - ratio
  bool within_bound = false;
};

// Runs greedy and the exact oracle on the sequence and compares the benefit
// ratio against the competitive bound.
BenefitReport competitive_report(const SwitchConfig& config, const EventSequence& seq,
                                 std::size_t oracle_budget = kDefaultOracleBudget);

// In every green interval, queues of class >= pivot stay empty and receive
// no arrivals. Forced by the greedy rule; a failure means the simulator or
// the partition is broken.
Verdict check_green_interval_quiet(const Transcript& greedy_t,
                                   const IntervalPartition& partition, int pivot);

// Per-event exchange bound inside one red interval, for cls in
// [pivot, m-1]: after every event,
//   greedy_only_accept - ref_only_accept
//     >= paired_sends - ref_sends + margin.
Verdict check_exchange_bound_per_event(const Ledger& ledger);

// Send-count budget of one red interval. Takes ledgers for cls = 0..m.
// Checks paired_sends <= ref_sends per class, and that the interval's send
// count covers the paired sends below the pivot, the reference sends in
// [pivot, m-1], and the paired top-class sends.
Verdict check_send_budget(const std::vector<Ledger>& ledgers, int pivot);

// Per red interval the acceptance surplus
//   phi = sum_{j>pivot} greedy sends + sum_{j=pivot}^{m-1}
//         (greedy_only_accept - ref_only_accept)
// is nonnegative, greedy's in-interval accepts of class >= pivot equal its
// in-interval sends, and summing red-interval accepts reproduces the global
// acceptance counts. Requires a drained sequence.
Verdict check_interval_surplus(const Transcript& greedy_t, const Transcript& ref_t,
                               const IntervalPartition& partition, int pivot);

// Runs every interval-level check for every pivot over a drained pair of
// transcripts (same sequence, both ending empty). Throws TranscriptMismatch
// if the transcripts differ on events or are not drained.
std::vector<Verdict> ledger_suite(const Transcript& greedy_t, const Transcript& ref_t);

// All acceptance-count checks for one instance against the canonical oracle
// witness: top-class, suffix, weighted, adjacent-ratio, competitive bound.
std::vector<Verdict> lemma_suite(const SwitchConfig& config, const EventSequence& seq,
                                 std::size_t oracle_budget = kDefaultOracleBudget);

// Aggregates fine-grained verdicts by check name.
struct CheckSummary {
  std::string check;
  int passed = 0;
  int failed = 0;
  int vacuous = 0;
  Rational min_slack = 0;
  bool has_slack = false;
};
std::vector<CheckSummary> summarize(const std::vector<Verdict>& verdicts);

}  // namespace qsim
