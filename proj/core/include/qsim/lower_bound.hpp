#pragma once

#include <cstddef>
#include <vector>

#include "qsim/model.hpp"

namespace qsim {

// Slot-by-slot layout of the adversarial sequence: m construction phases,
// one send per slot, then enough trailing sends to drain any diligent
// policy. Phase 1 has cap(m) slots and opens with a full load of every
// class; phase p (p >= 2) has cap(m+1-p) slots and opens with one arrival
// of class m+1-p; the remaining slots of each phase carry one arrival of
// the class just below the phase's opening class (none when that would be
// class 0).
struct PhasePlan {
  struct Slot {
    std::vector<int> arrivals;  // classes arriving before the slot's send
  };
  std::vector<std::vector<Slot>> phases;
  int drain_sends = 0;

  EventSequence expand() const;
  // Event index (into expand()) of each phase's final send.
  std::vector<std::size_t> phase_end_indices() const;
  // Event index of the last arrival of the final phase.
  std::size_t last_arrival_index() const;
};

// Throws DegenerateConfig when m < 2 (the construction needs a class below
// the top one).
PhasePlan lower_bound_plan(const SwitchConfig& config);
EventSequence generate_lower_bound_sequence(const SwitchConfig& config);

// Greedy's benefit on the generated sequence: sum of cap(j) * value(j).
Rational greedy_benefit_closed_form(const SwitchConfig& config);

// The scripted adversary's benefit on the generated sequence:
// cap(1)*value(1) + sum_{j>=2} cap(j)*(value(j-1) + value(j)).
Rational adv_benefit_closed_form(const SwitchConfig& config);

// Capacities 1 everywhere except cap(ell+1) = K.
SwitchConfig limit_config(const std::vector<Rational>& values, int ell, int K);

// Adversary/greedy benefit ratio for limit_config(values, ell, K). Monotone
// nondecreasing in K with limit 1 + value(ell)/value(ell+1); `ell` must
// attain the maximal adjacent value ratio (NotArgmaxEll otherwise).
Rational ratio_limit_demo(const std::vector<Rational>& values, int ell, int K);

}  // namespace qsim
