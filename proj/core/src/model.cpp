#include "qsim/model.hpp"

#include <algorithm>
#include <numeric>

#include "qsim/errors.hpp"

namespace qsim {

Rational SwitchConfig::max_adjacent_ratio() const {
  Rational best = 0;
  for (int i = 1; i < m; ++i) {
    Rational q = values[static_cast<std::size_t>(i) - 1] / values[static_cast<std::size_t>(i)];
    best = std::max(best, q);
  }
  return best;
}

Rational SwitchConfig::competitive_bound() const {
  return Rational(1) + max_adjacent_ratio();
}

int SwitchConfig::argmax_adjacent_ratio() const {
  Rational best = max_adjacent_ratio();
  for (int i = 1; i < m; ++i) {
    if (values[static_cast<std::size_t>(i) - 1] / values[static_cast<std::size_t>(i)] == best) {
      return i;
    }
  }
  return 0;
}

void validate_config(const SwitchConfig& config) {
  if (config.m < 1) {
    throw Error(Errc::empty_config, "need at least one class");
  }
  if (config.values.size() != static_cast<std::size_t>(config.m) ||
      config.caps.size() != static_cast<std::size_t>(config.m)) {
    throw Error(Errc::empty_config, "values/caps length must equal m");
  }
  for (const Rational& v : config.values) {
    if (!(Rational(0) < v)) {
      throw Error(Errc::non_positive_value, "packet values must be positive, got " + v.str());
    }
  }
  for (int i = 1; i < config.m; ++i) {
    if (!(config.values[static_cast<std::size_t>(i) - 1] < config.values[static_cast<std::size_t>(i)])) {
      throw Error(Errc::non_increasing_values,
                  "values must be strictly increasing at index " + std::to_string(i));
    }
  }
  for (int i = 0; i < config.m; ++i) {
    if (config.caps[static_cast<std::size_t>(i)] < 1) {
      throw Error(Errc::zero_capacity,
                  "queue " + std::to_string(i + 1) + " needs capacity >= 1");
    }
  }
}

void validate_sequence(const SwitchConfig& config, const EventSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Event& e = seq[i];
    if (e.is_arrive() && (e.cls < 1 || e.cls > config.m)) {
      throw Error(Errc::invalid_class,
                  "event " + std::to_string(i) + " arrives to class " + std::to_string(e.cls));
    }
  }
}

EventSequence with_drain(const SwitchConfig& config, EventSequence seq) {
  int total = std::accumulate(config.caps.begin(), config.caps.end(), 0);
  for (int i = 0; i < total; ++i) {
    seq.push_back(Event::send());
  }
  return seq;
}

bool QueueState::all_empty() const {
  return std::all_of(occupancy.begin(), occupancy.end(), [](int n) { return n == 0; });
}

int QueueState::highest_nonempty() const {
  for (int c = static_cast<int>(occupancy.size()); c >= 1; --c) {
    if (occupancy[static_cast<std::size_t>(c) - 1] > 0) {
      return c;
    }
  }
  return 0;
}

int QueueState::total() const {
  return std::accumulate(occupancy.begin(), occupancy.end(), 0);
}

std::pair<QueueState, StepOutcome> step(const QueueState& state,
                                        const SwitchConfig& config,
                                        const Event& event,
                                        std::optional<int> choice) {
  if (event.is_arrive()) {
    int cls = event.cls;
    if (cls < 1 || cls > config.m) {
      throw Error(Errc::invalid_class, "arrival to class " + std::to_string(cls));
    }
    QueueState next = state;
    int& occ = next.occupancy[static_cast<std::size_t>(cls) - 1];
    if (occ < config.cap(cls)) {
      ++occ;
      return {std::move(next), StepOutcome::accepted(cls)};
    }
    return {state, StepOutcome::rejected(cls)};
  }

  // send event
  if (state.all_empty()) {
    if (choice && *choice != 0) {
      throw Error(Errc::send_from_empty_queue,
                  "send from class " + std::to_string(*choice) + " with all queues empty");
    }
    return {state, StepOutcome::idle()};
  }
  if (!choice || *choice == 0) {
    throw Error(Errc::choice_required, "send event with nonempty queues needs a class choice");
  }
  int cls = *choice;
  if (cls < 1 || cls > config.m) {
    throw Error(Errc::invalid_class, "send choice " + std::to_string(cls));
  }
  if (state.at(cls) == 0) {
    throw Error(Errc::send_from_empty_queue, "class " + std::to_string(cls) + " is empty");
  }
  QueueState next = state;
  --next.occupancy[static_cast<std::size_t>(cls) - 1];
  return {std::move(next), StepOutcome::sent(cls)};
}

Rational Transcript::benefit() const {
  Rational total = 0;
  for (int c = 1; c <= config.m; ++c) {
    total += config.value(c) * Rational(accepted_of(c));
  }
  return total;
}

Rational Transcript::transmitted_value() const {
  Rational total = 0;
  for (int c = 1; c <= config.m; ++c) {
    total += config.value(c) * Rational(sent_of(c));
  }
  return total;
}

QueueState Transcript::final_state() const {
  if (entries.empty()) {
    return QueueState::empty(config);
  }
  return entries.back().after;
}

Transcript run(const SwitchConfig& config, const EventSequence& seq,
               const Scheduler& scheduler) {
  validate_config(config);
  validate_sequence(config, seq);

  Transcript t;
  t.config = config;
  t.accepted.assign(static_cast<std::size_t>(config.m), 0);
  t.sent.assign(static_cast<std::size_t>(config.m), 0);
  t.entries.reserve(seq.size());

  QueueState state = QueueState::empty(config);
  std::size_t send_ordinal = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Event& event = seq[i];
    std::optional<int> choice;
    if (event.is_send()) {
      int c = scheduler(state, config, SendContext{i, send_ordinal});
      ++send_ordinal;
      if (c != 0) {
        choice = c;
      }
    }
    auto [next, outcome] = step(state, config, event, choice);
    if (outcome.is_accepted()) {
      ++t.accepted[static_cast<std::size_t>(outcome.cls) - 1];
    } else if (outcome.is_sent()) {
      ++t.sent[static_cast<std::size_t>(outcome.cls) - 1];
    } else if (outcome.is_idle()) {
      ++t.idle_sends;
    }
    state = next;
    t.entries.push_back(TranscriptEntry{event, outcome, state});
  }
  return t;
}

std::string to_string(const Event& event) {
  if (event.is_arrive()) {
    return "A " + std::to_string(event.cls);
  }
  return "S";
}

std::string to_string(const StepOutcome& outcome) {
  switch (outcome.kind) {
    case StepOutcome::Kind::accepted:
      return "accepted(" + std::to_string(outcome.cls) + ")";
    case StepOutcome::Kind::rejected:
      return "rejected(" + std::to_string(outcome.cls) + ")";
    case StepOutcome::Kind::sent:
      return "sent(" + std::to_string(outcome.cls) + ")";
    case StepOutcome::Kind::idle:
      return "idle";
  }
  return "?";
}

}  // namespace qsim
