#pragma once

#include <cstddef>
#include <vector>

#include "qsim/intervals.hpp"
#include "qsim/model.hpp"

namespace qsim {

// Cumulative joint accounting for one (pivot, cls) pair after each event of
// one interval, comparing the greedy transcript against a reference
// schedule over the same events. All counters reset at the interval start;
// occupancies are absolute.
struct LedgerRow {
  std::size_t event_index = 0;
  // arrivals of `cls`, split by who admitted them
  int both_accept = 0;
  int greedy_only_accept = 0;
  int ref_only_accept = 0;
  int both_reject = 0;
  // sends where greedy transmitted `pivot` while the reference transmitted
  // `cls` (cls 0 = the reference idled)
  int paired_sends = 0;
  // reference transmissions of `cls` (cls 0 = reference idle sends)
  int ref_sends = 0;
  // greedy transmissions of `cls` (0 when cls == 0)
  int greedy_sends = 0;
  // max(0, greedy occupancy - reference occupancy) of queue `cls` after the
  // event; 0 when cls == 0
  int margin = 0;
  int greedy_occ = 0;
  int ref_occ = 0;
};

struct Ledger {
  int pivot = 0;  // class the red interval is keyed on
  int cls = 0;    // tracked class, in [0, m]; 0 tracks reference idling
  std::vector<LedgerRow> rows;
  int total_sends = 0;  // send events in the interval
};

// Walks one interval of two transcripts over the same sequence. Throws
// TranscriptMismatch when the transcripts disagree on the events.
Ledger build_ledger(const Transcript& greedy_t, const Transcript& ref_t,
                    const Interval& interval, int pivot, int cls);

}  // namespace qsim
