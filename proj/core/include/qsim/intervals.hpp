#pragma once

#include <cstddef>
#include <vector>

#include "qsim/model.hpp"

namespace qsim {

// Maximal run of events ending with a send. Red means every send in the run
// transmitted a class >= the pivot; green means every send transmitted a
// class below the pivot or idled. Arrive events attach to the interval of
// the next send.
struct Interval {
  bool red = false;
  std::size_t first_event = 0;
  std::size_t last_event = 0;            // inclusive; always a send event
  std::vector<std::size_t> send_events;  // indices of the sends inside
};

struct IntervalPartition {
  int pivot = 0;
  std::vector<Interval> intervals;       // colors alternate
  std::vector<std::size_t> tail_events;  // arrivals after the final send, if any
};

// Splits a greedy transcript by the color of its sends for a pivot class in
// [1, m-1]. Consecutive same-color sends merge, so colors alternate.
IntervalPartition partition_intervals(const Transcript& greedy_t, int pivot);

}  // namespace qsim
