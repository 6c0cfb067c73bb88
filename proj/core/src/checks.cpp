#include "qsim/checks.hpp"

#include <algorithm>
#include <map>

#include "qsim/errors.hpp"
#include "qsim/policies.hpp"

namespace qsim {

namespace {

Verdict fail(std::string check, std::string detail) {
  Verdict v;
  v.check = std::move(check);
  v.pass = false;
  v.detail = std::move(detail);
  return v;
}

Verdict pass(std::string check, Rational slack, std::string detail = {}) {
  Verdict v;
  v.check = std::move(check);
  v.slack = slack;
  v.detail = std::move(detail);
  return v;
}

Verdict vacuous(std::string check, std::string detail) {
  Verdict v;
  v.check = std::move(check);
  v.vacuous = true;
  v.detail = std::move(detail);
  return v;
}

void track_min(Rational& current, bool& set, const Rational& candidate) {
  if (!set || candidate < current) {
    current = candidate;
    set = true;
  }
}

}  // namespace

std::vector<int> acceptance_counts(const Transcript& t) { return t.accepted; }

Verdict check_top_class_acceptance(const std::vector<int>& greedy_accepted,
                                   const OptResult& opt) {
  const char* name = "top-class-acceptance";
  std::size_t m = greedy_accepted.size();
  int greedy_top = greedy_accepted[m - 1];
  int canon_top = opt.accepted[m - 1];
  int anti_top = opt.min_accepted[m - 1];
  if (canon_top != greedy_top) {
    return fail(name, "canonical witness accepts " + std::to_string(canon_top) +
                          " top-class packets, greedy accepts " + std::to_string(greedy_top));
  }
  if (anti_top > greedy_top) {
    return fail(name, "an optimal schedule accepts " + std::to_string(anti_top) +
                          " top-class packets, greedy accepts " + std::to_string(greedy_top));
  }
  if (opt.max_top_class_accepts != greedy_top) {
    return fail(name, "some diligent schedule accepts " +
                          std::to_string(opt.max_top_class_accepts) +
                          " top-class packets, greedy accepts " + std::to_string(greedy_top));
  }
  return pass(name, 0);
}

Verdict check_suffix_acceptance_bound(const std::vector<int>& greedy_accepted,
                                      const std::vector<int>& opt_accepted) {
  const char* name = "suffix-acceptance-bound";
  const int m = static_cast<int>(greedy_accepted.size());
  Rational min_slack = 0;
  bool seen = false;
  std::string slacks;
  for (int i = 1; i <= m - 1; ++i) {
    long long lhs = 0;
    long long rhs = 0;
    for (int j = i; j <= m - 1; ++j) {
      lhs += opt_accepted[static_cast<std::size_t>(j) - 1] -
             greedy_accepted[static_cast<std::size_t>(j) - 1];
    }
    for (int j = i + 1; j <= m; ++j) {
      rhs += greedy_accepted[static_cast<std::size_t>(j) - 1];
    }
    if (lhs > rhs) {
      return fail(name, "pivot " + std::to_string(i) + ": deficit " + std::to_string(lhs) +
                            " > " + std::to_string(rhs));
    }
    if (!slacks.empty()) {
      slacks += ' ';
    }
    slacks += std::to_string(i) + ":" + std::to_string(rhs - lhs);
    track_min(min_slack, seen, Rational(rhs - lhs));
  }
  if (!seen) {
    return vacuous(name, "single class");
  }
  return pass(name, min_slack, "slack per pivot: " + slacks);
}

Verdict check_weighted_acceptance_bound(const std::vector<int>& greedy_accepted,
                                        const std::vector<int>& opt_accepted,
                                        const std::vector<Rational>& values) {
  const char* name = "weighted-acceptance-bound";
  const int m = static_cast<int>(values.size());
  if (m < 2) {
    return vacuous(name, "single class");
  }
  Rational lhs = 0;
  Rational rhs = 0;
  for (int j = 1; j <= m - 1; ++j) {
    Rational v = values[static_cast<std::size_t>(j) - 1];
    lhs += v * Rational(opt_accepted[static_cast<std::size_t>(j) - 1] -
                        greedy_accepted[static_cast<std::size_t>(j) - 1]);
    rhs += v * Rational(greedy_accepted[static_cast<std::size_t>(j)]);
  }
  if (rhs < lhs) {
    return fail(name, "weighted deficit " + lhs.str() + " > " + rhs.str());
  }
  return pass(name, rhs - lhs);
}

Verdict check_adjacent_value_ratio(const std::vector<int>& greedy_accepted,
                                   const std::vector<Rational>& values) {
  const char* name = "adjacent-value-ratio";
  const int m = static_cast<int>(values.size());
  if (m < 2) {
    return vacuous(name, "single class");
  }
  Rational num = 0;
  Rational den = 0;
  Rational r = 0;
  for (int j = 1; j <= m - 1; ++j) {
    Rational a = Rational(greedy_accepted[static_cast<std::size_t>(j)]);
    num += values[static_cast<std::size_t>(j) - 1] * a;
    den += values[static_cast<std::size_t>(j)] * a;
    r = std::max(r, values[static_cast<std::size_t>(j) - 1] / values[static_cast<std::size_t>(j)]);
  }
  if (den.is_zero()) {
    return vacuous(name, "no acceptances above class 1");
  }
  Rational q = num / den;
  if (r < q) {
    return fail(name, "ratio " + q.str() + " exceeds " + r.str());
  }
  return pass(name, r - q);
}

static BenefitReport assemble_report(const SwitchConfig& config, const Transcript& greedy_t,
                                     const OptResult& opt) {
  BenefitReport report;
  report.greedy_accepted = greedy_t.accepted;
  report.opt_accepted = opt.accepted;
  report.greedy_benefit = greedy_t.benefit();
  report.opt_benefit = opt.benefit;
  report.max_adjacent_ratio = config.max_adjacent_ratio();
  report.bound = config.competitive_bound();
  if (report.greedy_benefit.is_zero()) {
    if (!report.opt_benefit.is_zero()) {
      // Unreachable for diligent policies: greedy accepts at least one packet
      // whenever any schedule does.
      throw Error(Errc::violation_found, "zero greedy benefit against positive optimum");
    }
    report.ratio = 1;
  } else {
    report.ratio = report.opt_benefit / report.greedy_benefit;
  }
  report.slack = report.bound - report.ratio;
  report.within_bound = !(report.bound < report.ratio);
  return report;
}

BenefitReport competitive_report(const SwitchConfig& config, const EventSequence& seq,
                                 std::size_t oracle_budget) {
  Transcript greedy_t = run_greedy(config, seq);
  OptResult opt = brute_force_opt(config, seq, oracle_budget);
  return assemble_report(config, greedy_t, opt);
}

Verdict check_green_interval_quiet(const Transcript& greedy_t,
                                   const IntervalPartition& partition, int pivot) {
  const char* name = "green-interval-quiet";
  const int m = greedy_t.config.m;
  bool any = false;
  for (std::size_t k = 0; k < partition.intervals.size(); ++k) {
    const Interval& itv = partition.intervals[k];
    if (itv.red) {
      continue;
    }
    any = true;
    for (std::size_t i = itv.first_event; i <= itv.last_event; ++i) {
      const TranscriptEntry& e = greedy_t.entries[i];
      if (e.event.is_arrive() && e.event.cls >= pivot) {
        return fail(name, "green interval " + std::to_string(k) + ": class " +
                              std::to_string(e.event.cls) + " arrival at event " +
                              std::to_string(i));
      }
      for (int c = pivot; c <= m; ++c) {
        if (e.after.at(c) != 0) {
          return fail(name, "green interval " + std::to_string(k) + ": queue " +
                                std::to_string(c) + " nonempty after event " + std::to_string(i));
        }
      }
    }
  }
  if (!any) {
    return vacuous(name, "no green intervals");
  }
  return pass(name, 0);
}

Verdict check_exchange_bound_per_event(const Ledger& ledger) {
  const char* name = "exchange-bound";
  Rational min_slack = 0;
  bool seen = false;
  for (const LedgerRow& row : ledger.rows) {
    int lhs = row.greedy_only_accept - row.ref_only_accept;
    int rhs = row.paired_sends - row.ref_sends + row.margin;
    if (lhs < rhs) {
      return fail(name, "pivot " + std::to_string(ledger.pivot) + " class " +
                            std::to_string(ledger.cls) + " event " +
                            std::to_string(row.event_index) + ": " + std::to_string(lhs) +
                            " < " + std::to_string(rhs));
    }
    track_min(min_slack, seen, Rational(lhs - rhs));
  }
  if (!seen) {
    return vacuous(name, "empty interval");
  }
  return pass(name, min_slack,
              "pivot " + std::to_string(ledger.pivot) + " class " + std::to_string(ledger.cls));
}

Verdict check_send_budget(const std::vector<Ledger>& ledgers, int pivot) {
  const char* name = "send-budget";
  if (ledgers.empty()) {
    return vacuous(name, "no ledgers");
  }
  const int m = static_cast<int>(ledgers.size()) - 1;
  long long covered = 0;
  int total_sends = ledgers[0].total_sends;
  for (int cls = 0; cls <= m; ++cls) {
    const Ledger& led = ledgers[static_cast<std::size_t>(cls)];
    if (led.rows.empty()) {
      return vacuous(name, "empty interval");
    }
    const LedgerRow& end = led.rows.back();
    if (end.paired_sends > end.ref_sends) {
      return fail(name, "class " + std::to_string(cls) + ": paired sends " +
                            std::to_string(end.paired_sends) + " exceed reference sends " +
                            std::to_string(end.ref_sends));
    }
    if (cls < pivot || cls == m) {
      covered += end.paired_sends;
    } else {
      covered += end.ref_sends;
    }
  }
  if (covered > total_sends) {
    return fail(name, "covered sends " + std::to_string(covered) + " exceed interval total " +
                          std::to_string(total_sends));
  }
  return pass(name, Rational(total_sends - covered), "pivot " + std::to_string(pivot));
}

Verdict check_interval_surplus(const Transcript& greedy_t, const Transcript& ref_t,
                               const IntervalPartition& partition, int pivot) {
  const char* name = "interval-surplus";
  const int m = greedy_t.config.m;
  std::vector<long long> red_accepts(static_cast<std::size_t>(m) + 1, 0);
  Rational min_slack = 0;
  bool seen = false;

  for (std::size_t k = 0; k < partition.intervals.size(); ++k) {
    const Interval& itv = partition.intervals[k];
    if (!itv.red) {
      continue;
    }
    long long phi = 0;
    long long interval_sends = 0;
    for (int cls = pivot; cls <= m; ++cls) {
      Ledger led = build_ledger(greedy_t, ref_t, itv, pivot, cls);
      const LedgerRow& end = led.rows.back();
      int accepted_here = end.both_accept + end.greedy_only_accept;
      int ref_accepted_here = end.both_accept + end.ref_only_accept;
      red_accepts[static_cast<std::size_t>(cls)] += accepted_here;
      interval_sends += end.greedy_sends;
      // in-interval accepts equal in-interval sends for classes >= pivot
      if (accepted_here != end.greedy_sends) {
        return fail(name, "red interval " + std::to_string(k) + ": class " +
                              std::to_string(cls) + " accepts " + std::to_string(accepted_here) +
                              " but sends " + std::to_string(end.greedy_sends));
      }
      int exchange = end.greedy_only_accept - end.ref_only_accept;
      if (accepted_here - ref_accepted_here != exchange) {
        return fail(name, "red interval " + std::to_string(k) + ": class " +
                              std::to_string(cls) + " acceptance split is inconsistent");
      }
      if (cls > pivot) {
        phi += end.greedy_sends;
      }
      if (cls <= m - 1) {
        phi += exchange;
      }
    }
    // every send in a red interval transmits class >= pivot
    if (interval_sends != static_cast<long long>(itv.send_events.size())) {
      return fail(name, "red interval " + std::to_string(k) +
                            " contains sends below the pivot");
    }
    if (phi < 0) {
      return fail(name, "red interval " + std::to_string(k) + ": surplus " +
                            std::to_string(phi) + " < 0");
    }
    track_min(min_slack, seen, Rational(phi));
  }

  // Aggregation: red intervals account for every acceptance of class >= pivot.
  for (int cls = pivot; cls <= m; ++cls) {
    long long global = greedy_t.accepted[static_cast<std::size_t>(cls) - 1];
    if (red_accepts[static_cast<std::size_t>(cls)] != global) {
      return fail(name, "class " + std::to_string(cls) + ": red intervals account for " +
                            std::to_string(red_accepts[static_cast<std::size_t>(cls)]) +
                            " acceptances of " + std::to_string(global));
    }
  }
  if (!seen) {
    return vacuous(name, "no red intervals");
  }
  return pass(name, min_slack, "pivot " + std::to_string(pivot));
}

std::vector<Verdict> ledger_suite(const Transcript& greedy_t, const Transcript& ref_t) {
  if (greedy_t.entries.size() != ref_t.entries.size() || greedy_t.config != ref_t.config) {
    throw Error(Errc::transcript_mismatch, "transcripts cover different runs");
  }
  if (!greedy_t.final_state().all_empty() || !ref_t.final_state().all_empty()) {
    throw Error(Errc::transcript_mismatch,
                "interval analysis requires a drained sequence (append sends)");
  }
  const int m = greedy_t.config.m;
  std::vector<Verdict> out;
  for (int pivot = 1; pivot <= m - 1; ++pivot) {
    IntervalPartition part = partition_intervals(greedy_t, pivot);
    out.push_back(check_green_interval_quiet(greedy_t, part, pivot));
    for (const Interval& itv : part.intervals) {
      if (!itv.red) {
        continue;
      }
      std::vector<Ledger> ledgers;
      ledgers.reserve(static_cast<std::size_t>(m) + 1);
      for (int cls = 0; cls <= m; ++cls) {
        ledgers.push_back(build_ledger(greedy_t, ref_t, itv, pivot, cls));
      }
      for (int cls = pivot; cls <= m - 1; ++cls) {
        out.push_back(check_exchange_bound_per_event(ledgers[static_cast<std::size_t>(cls)]));
      }
      out.push_back(check_send_budget(ledgers, pivot));
    }
    out.push_back(check_interval_surplus(greedy_t, ref_t, part, pivot));
  }
  return out;
}

std::vector<Verdict> lemma_suite(const SwitchConfig& config, const EventSequence& seq,
                                 std::size_t oracle_budget) {
  Transcript greedy_t = run_greedy(config, seq);
  OptResult opt = brute_force_opt(config, seq, oracle_budget);

  std::vector<Verdict> out;
  out.push_back(check_top_class_acceptance(greedy_t.accepted, opt));
  out.push_back(check_suffix_acceptance_bound(greedy_t.accepted, opt.accepted));
  out.push_back(check_weighted_acceptance_bound(greedy_t.accepted, opt.accepted, config.values));
  out.push_back(check_adjacent_value_ratio(greedy_t.accepted, config.values));

  BenefitReport report = assemble_report(config, greedy_t, opt);
  Verdict comp;
  comp.check = "competitive-bound";
  comp.pass = report.within_bound;
  comp.slack = report.slack;
  comp.detail = "ratio " + report.ratio.str() + " vs bound " + report.bound.str();
  out.push_back(comp);
  return out;
}

std::vector<CheckSummary> summarize(const std::vector<Verdict>& verdicts) {
  std::map<std::string, CheckSummary> by_name;
  for (const Verdict& v : verdicts) {
    CheckSummary& s = by_name[v.check];
    s.check = v.check;
    if (v.vacuous) {
      ++s.vacuous;
    } else if (v.pass) {
      ++s.passed;
      if (!s.has_slack || v.slack < s.min_slack) {
        s.min_slack = v.slack;
        s.has_slack = true;
      }
    } else {
      ++s.failed;
    }
  }
  std::vector<CheckSummary> out;
  out.reserve(by_name.size());
  for (auto& [_, s] : by_name) {
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qsim
