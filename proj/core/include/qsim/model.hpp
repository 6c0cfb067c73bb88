#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsim/rational.hpp"

namespace qsim {

// One switch instance: m segregated queues, queue c buffering only packets of
// value values[c-1], with capacity caps[c-1]. Values are strictly increasing
// and strictly positive; capacities are at least 1 and need not be equal.
struct SwitchConfig {
  int m = 0;
  std::vector<Rational> values;
  std::vector<int> caps;

  Rational value(int cls) const { return values[static_cast<std::size_t>(cls) - 1]; }
  int cap(int cls) const { return caps[static_cast<std::size_t>(cls) - 1]; }

  // max over adjacent classes of values[i]/values[i+1]; lies in (0, 1).
  Rational max_adjacent_ratio() const;
  // 1 + max_adjacent_ratio(): the competitive bound for the greedy policy.
  Rational competitive_bound() const;
  // smallest class index realizing max_adjacent_ratio().
  int argmax_adjacent_ratio() const;

  friend bool operator==(const SwitchConfig&, const SwitchConfig&) = default;
};

// Throws Error naming the first violated invariant; returns normally iff the
// config is well formed.
void validate_config(const SwitchConfig& config);

struct Event {
  enum class Kind { arrive, send };

  Kind kind = Kind::send;
  int cls = 0;  // 1-based arrival class; 0 for send events

  static Event arrive(int cls) { return Event{Kind::arrive, cls}; }
  static Event send() { return Event{Kind::send, 0}; }

  bool is_arrive() const { return kind == Kind::arrive; }
  bool is_send() const { return kind == Kind::send; }

  friend bool operator==(const Event&, const Event&) = default;
};

using EventSequence = std::vector<Event>;

// Throws InvalidClass if any arrival names a class outside [1, m].
void validate_sequence(const SwitchConfig& config, const EventSequence& seq);

// Appends enough send events for any diligent policy to empty all queues
// (sum of capacities).
EventSequence with_drain(const SwitchConfig& config, EventSequence seq);

// Per-class packet counts. Packets within one queue are indistinguishable, so
// counts are the whole state.
struct QueueState {
  std::vector<int> occupancy;  // occupancy[c-1] for class c

  static QueueState empty(const SwitchConfig& config) {
    return QueueState{std::vector<int>(static_cast<std::size_t>(config.m), 0)};
  }

  int at(int cls) const { return occupancy[static_cast<std::size_t>(cls) - 1]; }
  bool all_empty() const;
  // Largest class with a buffered packet; 0 if all queues are empty.
  int highest_nonempty() const;
  int total() const;

  friend bool operator==(const QueueState&, const QueueState&) = default;
};

struct StepOutcome {
  enum class Kind { accepted, rejected, sent, idle };

  Kind kind = Kind::idle;
  int cls = 0;  // arrival class or transmitted class; 0 for idle

  static StepOutcome accepted(int cls) { return {Kind::accepted, cls}; }
  static StepOutcome rejected(int cls) { return {Kind::rejected, cls}; }
  static StepOutcome sent(int cls) { return {Kind::sent, cls}; }
  static StepOutcome idle() { return {Kind::idle, 0}; }

  bool is_accepted() const { return kind == Kind::accepted; }
  bool is_rejected() const { return kind == Kind::rejected; }
  bool is_sent() const { return kind == Kind::sent; }
  bool is_idle() const { return kind == Kind::idle; }

  friend bool operator==(const StepOutcome&, const StepOutcome&) = default;
};

// Single-event transition. Arrivals are admitted exactly when the destination
// queue has room (diligent admission: class segregation leaves no choice).
// A send with every queue empty idles; otherwise `choice` must name a
// nonempty queue, which transmits one packet.
std::pair<QueueState, StepOutcome> step(const QueueState& state,
                                        const SwitchConfig& config,
                                        const Event& event,
                                        std::optional<int> choice);

// Position handed to a scheduler at each send event.
struct SendContext {
  std::size_t event_index = 0;  // index into the event sequence
  std::size_t send_ordinal = 0;  // number of send events before this one
};

// Decision procedure consulted at every send event. Must return a nonempty
// queue's class, or 0 when every queue is empty (the runner enforces
// diligence: 0 with a nonempty queue is an error). Schedulers must be pure;
// scripted schedulers key off the context.
using Scheduler =
    std::function<int(const QueueState&, const SwitchConfig&, const SendContext&)>;

struct TranscriptEntry {
  Event event;
  StepOutcome outcome;
  QueueState after;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Full record of one policy's run: per-event outcomes and state snapshots,
// plus per-class acceptance and transmission totals.
struct Transcript {
  SwitchConfig config;
  std::vector<TranscriptEntry> entries;
  std::vector<int> accepted;  // per-class accepted arrivals
  std::vector<int> sent;      // per-class transmitted packets
  int idle_sends = 0;

  // Total value of accepted packets. In this nonpreemptive model every
  // accepted packet is eventually transmitted, so this equals the transmitted
  // value once the sequence drains.
  Rational benefit() const;
  // Total value actually transmitted within the sequence.
  Rational transmitted_value() const;

  QueueState final_state() const;
  int accepted_of(int cls) const { return accepted[static_cast<std::size_t>(cls) - 1]; }
  int sent_of(int cls) const { return sent[static_cast<std::size_t>(cls) - 1]; }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Folds step over the sequence, consulting the scheduler at send events.
// Pure: identical arguments produce identical transcripts.
Transcript run(const SwitchConfig& config, const EventSequence& seq,
               const Scheduler& scheduler);

std::string to_string(const Event& event);
std::string to_string(const StepOutcome& outcome);

}  // namespace qsim
