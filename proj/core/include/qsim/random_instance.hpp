#pragma once

#include <cstdint>

#include "qsim/model.hpp"

namespace qsim {

// Ranges for seeded instance generation. Values are drawn as distinct
// positive rationals (numerator in [1, value_num_max], denominator in
// [1, value_den_max]) and sorted; set value_den_max = 1 for integer values.
struct RandomBounds {
  int m_min = 2;
  int m_max = 4;
  int cap_min = 1;
  int cap_max = 3;
  int max_events = 18;
  int value_num_max = 60;
  int value_den_max = 6;
  // Per-instance arrival probability is itself drawn from this range, so the
  // sweep mixes bursty and sparse traffic.
  double arrive_prob_min = 0.35;
  double arrive_prob_max = 0.85;
};

struct Instance {
  std::uint64_t seed = 0;
  SwitchConfig config;
  EventSequence sequence;
};

// Deterministic in (seed, bounds): the generator is std::mt19937_64, which
// the standard pins bit-exactly, so instances replicate across platforms.
Instance random_instance(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace qsim
