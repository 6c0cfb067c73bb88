#include "qsim/lower_bound.hpp"

#include <numeric>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

EventSequence PhasePlan::expand() const {
  EventSequence seq;
  for (const auto& phase : phases) {
    for (const PhasePlan::Slot& slot : phase) {
      for (int cls : slot.arrivals) {
        seq.push_back(Event::arrive(cls));
      }
      seq.push_back(Event::send());
    }
  }
  for (int i = 0; i < drain_sends; ++i) {
    seq.push_back(Event::send());
  }
  return seq;
}

std::vector<std::size_t> PhasePlan::phase_end_indices() const {
  std::vector<std::size_t> ends;
  std::size_t idx = 0;
  for (const auto& phase : phases) {
    for (const PhasePlan::Slot& slot : phase) {
      idx += slot.arrivals.size() + 1;
    }
    ends.push_back(idx - 1);
  }
  return ends;
}

std::size_t PhasePlan::last_arrival_index() const {
  std::size_t idx = 0;
  std::size_t last = 0;
  bool seen = false;
  for (const auto& phase : phases) {
    for (const PhasePlan::Slot& slot : phase) {
      if (!slot.arrivals.empty()) {
        last = idx + slot.arrivals.size() - 1;
        seen = true;
      }
      idx += slot.arrivals.size() + 1;
    }
  }
  if (!seen) {
    throw Error(Errc::degenerate_config, "plan has no arrivals");
  }
  return last;
}

PhasePlan lower_bound_plan(const SwitchConfig& config) {
  validate_config(config);
  const int m = config.m;
  if (m < 2) {
    throw Error(Errc::degenerate_config, "construction needs m >= 2");
  }

  PhasePlan plan;
  plan.phases.resize(static_cast<std::size_t>(m));

  // Phase 1: cap(m) slots. Slot 1 fills every queue; later slots feed one
  // packet of class m-1.
  {
    auto& phase = plan.phases[0];
    PhasePlan::Slot first;
    for (int c = 1; c <= m; ++c) {
      first.arrivals.insert(first.arrivals.end(), static_cast<std::size_t>(config.cap(c)), c);
    }
    phase.push_back(std::move(first));
    for (int s = 2; s <= config.cap(m); ++s) {
      phase.push_back(PhasePlan::Slot{{m - 1}});
    }
  }

  // Phase p (p >= 2): cap(m+1-p) slots. Slot 1 carries one arrival of class
  // m+1-p; later slots one arrival of class m-p, omitted entirely for the
  // final phase (class 0 would be a null packet).
  for (int p = 2; p <= m; ++p) {
    auto& phase = plan.phases[static_cast<std::size_t>(p) - 1];
    phase.push_back(PhasePlan::Slot{{m + 1 - p}});
    for (int s = 2; s <= config.cap(m + 1 - p); ++s) {
      if (p < m) {
        phase.push_back(PhasePlan::Slot{{m - p}});
      } else {
        phase.push_back(PhasePlan::Slot{});
      }
    }
  }

  plan.drain_sends = std::accumulate(config.caps.begin(), config.caps.end(), 0);
  return plan;
}

EventSequence generate_lower_bound_sequence(const SwitchConfig& config) {
  return lower_bound_plan(config).expand();
}

Rational greedy_benefit_closed_form(const SwitchConfig& config) {
  validate_config(config);
  if (config.m < 2) {
    throw Error(Errc::degenerate_config, "construction needs m >= 2");
  }
  Rational total = 0;
  for (int c = 1; c <= config.m; ++c) {
    total += Rational(config.cap(c)) * config.value(c);
  }
  return total;
}

Rational adv_benefit_closed_form(const SwitchConfig& config) {
  validate_config(config);
  if (config.m < 2) {
    throw Error(Errc::degenerate_config, "construction needs m >= 2");
  }
  Rational total = Rational(config.cap(1)) * config.value(1);
  for (int c = 2; c <= config.m; ++c) {
    total += Rational(config.cap(c)) * (config.value(c - 1) + config.value(c));
  }
  return total;
}

SwitchConfig limit_config(const std::vector<Rational>& values, int ell, int K) {
  SwitchConfig config;
  config.m = static_cast<int>(values.size());
  config.values = values;
  config.caps.assign(values.size(), 1);
  if (ell < 1 || ell >= config.m) {
    throw Error(Errc::not_argmax_ell, "ell must lie in [1, m-1]");
  }
  if (K < 1) {
    throw Error(Errc::zero_capacity, "K must be >= 1");
  }
  config.caps[static_cast<std::size_t>(ell)] = K;
  validate_config(config);
  return config;
}

Rational ratio_limit_demo(const std::vector<Rational>& values, int ell, int K) {
  SwitchConfig config = limit_config(values, ell, K);
  Rational r = config.max_adjacent_ratio();
  if (config.value(ell) / config.value(ell + 1) != r) {
    throw Error(Errc::not_argmax_ell,
                "class " + std::to_string(ell) + " does not attain the max adjacent ratio");
  }
  return adv_benefit_closed_form(config) / greedy_benefit_closed_form(config);
}

}  // namespace qsim
