#pragma once

#include <vector>

#include "qsim/errors.hpp"
#include "qsim/model.hpp"

namespace qsim {

// Class transmitted by the greedy policy: the largest nonempty queue index
// (unique, since queue c holds exactly the class-c value). Throws
// AllQueuesEmpty when nothing is buffered.
int greedy_decide(const QueueState& state, const SwitchConfig& config);

// greedy_decide wrapped as a Scheduler (returns 0 on an all-empty state, the
// runner's idle signal).
Scheduler greedy_scheduler();

// Sends the smallest nonempty class instead of the largest. Exists as a
// negative control: the verification suite must flag it.
Scheduler worst_fit_scheduler();

// Scheduler that plays back one class choice per send event, indexed by send
// ordinal. Entry 0 means "expect all queues empty". Raises `on_mismatch` if
// the script is exhausted, names an empty queue, or says idle while packets
// are buffered.
Scheduler script_scheduler(std::vector<int> script, Errc on_mismatch);

Transcript run_greedy(const SwitchConfig& config, const EventSequence& seq);

// Per-send-event class choices of the scripted offline policy for the
// generated lower-bound sequence of `config`: each construction phase
// transmits one class below the phase's arrival class, then the buffered
// backlog drains highest class first. Only feasible on that sequence.
std::vector<int> adv_script(const SwitchConfig& config);

// adv_script wrapped as a Scheduler; any deviation from the expected queue
// shape raises InfeasibleScript.
Scheduler adv_schedule(const SwitchConfig& config);

}  // namespace qsim
