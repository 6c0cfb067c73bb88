#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qsim/model.hpp"

namespace qsim {

inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

// Exact optimum over all diligent schedules.
struct OptResult {
  Rational benefit;
  // Acceptance counts of the canonical witness: among maximum-benefit
  // schedules, the lexicographically largest (top class first) profile.
  std::vector<int> accepted;
  // Class choice per send event of the canonical witness; 0 marks a send
  // with every queue empty.
  std::vector<int> witness;
  // Lexicographically smallest acceptance profile among maximum-benefit
  // schedules; equals `accepted` iff the optimal profile is unique.
  std::vector<int> min_accepted;
  // Maximum top-class acceptance count over *all* diligent schedules,
  // optimal or not.
  int max_top_class_accepts = 0;
  std::string tie_break = "lex-max(top..bottom)";
  std::size_t states = 0;
};

// Dynamic program over (event index, occupancy vector). The admission side
// is forced for diligent schedules, so only send choices branch; memoizing
// on occupancy collapses the exponentially many schedules that share a
// state. Throws BudgetExceeded if (|seq|+1) * prod(cap+1) exceeds
// state_budget -- the result is exact or absent, never truncated.
OptResult brute_force_opt(const SwitchConfig& config, const EventSequence& seq,
                          std::size_t state_budget = kDefaultOracleBudget);

// Replays the canonical witness through the simulator. Throws
// WitnessMismatch if the witness does not fit the sequence or reproduces
// different acceptance counts.
Transcript optimal_transcript(const SwitchConfig& config, const EventSequence& seq,
                              const OptResult& opt);

// Independent cross-check: direct exhaustive recursion over send choices
// with idling permitted even while queues are nonempty (relaxing the
// diligence requirement). No memoization, so it shares nothing with the
// dynamic program above. Exponential; throws BudgetExceeded when the
// choice tree is too large (fine up to roughly a dozen events).
Rational relaxed_opt_benefit(const SwitchConfig& config, const EventSequence& seq);

}  // namespace qsim
