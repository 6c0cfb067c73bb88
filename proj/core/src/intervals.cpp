#include "qsim/intervals.hpp"

#include <string>

#include "qsim/errors.hpp"

namespace qsim {

IntervalPartition partition_intervals(const Transcript& greedy_t, int pivot) {
  if (pivot < 1 || pivot >= greedy_t.config.m) {
    throw Error(Errc::invalid_class,
                "pivot " + std::to_string(pivot) + " outside [1, m-1]");
  }

  IntervalPartition part;
  part.pivot = pivot;

  std::size_t run_start = 0;  // first event not yet assigned to an interval
  Interval current;
  bool open = false;

  for (std::size_t i = 0; i < greedy_t.entries.size(); ++i) {
    const TranscriptEntry& entry = greedy_t.entries[i];
    if (entry.event.is_arrive()) {
      continue;
    }
    bool red = entry.outcome.is_sent() && entry.outcome.cls >= pivot;
    if (open && current.red == red) {
      current.last_event = i;
      current.send_events.push_back(i);
    } else {
      if (open) {
        part.intervals.push_back(std::move(current));
      }
      current = Interval{};
      current.red = red;
      current.first_event = run_start;
      current.last_event = i;
      current.send_events.push_back(i);
      open = true;
    }
    run_start = i + 1;
  }
  if (open) {
    part.intervals.push_back(std::move(current));
  }
  for (std::size_t i = run_start; i < greedy_t.entries.size(); ++i) {
    part.tail_events.push_back(i);
  }
  return part;
}

}  // namespace qsim
