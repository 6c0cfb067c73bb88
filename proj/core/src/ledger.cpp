#include "qsim/ledger.hpp"

#include <algorithm>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

Ledger build_ledger(const Transcript& greedy_t, const Transcript& ref_t,
                    const Interval& interval, int pivot, int cls) {
  if (greedy_t.entries.size() != ref_t.entries.size() || greedy_t.config != ref_t.config) {
    throw Error(Errc::transcript_mismatch, "transcripts cover different runs");
  }
  const int m = greedy_t.config.m;
  if (cls < 0 || cls > m) {
    throw Error(Errc::invalid_class, "ledger class " + std::to_string(cls));
  }
  if (interval.last_event >= greedy_t.entries.size()) {
    throw Error(Errc::transcript_mismatch, "interval exceeds transcript");
  }

  Ledger ledger;
  ledger.pivot = pivot;
  ledger.cls = cls;
  LedgerRow acc;

  for (std::size_t i = interval.first_event; i <= interval.last_event; ++i) {
    const TranscriptEntry& ge = greedy_t.entries[i];
    const TranscriptEntry& re = ref_t.entries[i];
    if (ge.event != re.event) {
      throw Error(Errc::transcript_mismatch,
                  "event " + std::to_string(i) + " differs between transcripts");
    }

    if (ge.event.is_arrive()) {
      if (cls >= 1 && ge.event.cls == cls) {
        bool g = ge.outcome.is_accepted();
        bool r = re.outcome.is_accepted();
        acc.both_accept += (g && r);
        acc.greedy_only_accept += (g && !r);
        acc.ref_only_accept += (!g && r);
        acc.both_reject += (!g && !r);
      }
    } else {
      ++ledger.total_sends;
      int greedy_cls = ge.outcome.is_sent() ? ge.outcome.cls : 0;
      int ref_cls = re.outcome.is_sent() ? re.outcome.cls : 0;
      if (ref_cls == cls) {
        ++acc.ref_sends;
        if (greedy_cls == pivot) {
          ++acc.paired_sends;
        }
      }
      if (cls >= 1 && greedy_cls == cls) {
        ++acc.greedy_sends;
      }
    }

    acc.event_index = i;
    if (cls >= 1) {
      acc.greedy_occ = ge.after.at(cls);
      acc.ref_occ = re.after.at(cls);
      acc.margin = std::max(0, acc.greedy_occ - acc.ref_occ);
    }
    ledger.rows.push_back(acc);
  }
  return ledger;
}

}  // namespace qsim
