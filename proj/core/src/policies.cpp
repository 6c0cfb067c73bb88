#include "qsim/policies.hpp"

#include <memory>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

int greedy_decide(const QueueState& state, const SwitchConfig& config) {
  (void)config;
  int c = state.highest_nonempty();
  if (c == 0) {
    throw Error(Errc::all_queues_empty, "no packet to transmit");
  }
  return c;
}

Scheduler greedy_scheduler() {
  return [](const QueueState& state, const SwitchConfig&, const SendContext&) {
    return state.highest_nonempty();
  };
}

Scheduler worst_fit_scheduler() {
  return [](const QueueState& state, const SwitchConfig& config, const SendContext&) {
    for (int c = 1; c <= config.m; ++c) {
      if (state.at(c) > 0) {
        return c;
      }
    }
    return 0;
  };
}

Scheduler script_scheduler(std::vector<int> script, Errc on_mismatch) {
  auto shared = std::make_shared<std::vector<int>>(std::move(script));
  return [shared, on_mismatch](const QueueState& state, const SwitchConfig& config,
                               const SendContext& ctx) {
    if (ctx.send_ordinal >= shared->size()) {
      throw Error(on_mismatch,
                  "script has no entry for send #" + std::to_string(ctx.send_ordinal));
    }
    int c = (*shared)[ctx.send_ordinal];
    if (c == 0) {
      if (!state.all_empty()) {
        throw Error(on_mismatch, "script expects empty queues at send #" +
                                     std::to_string(ctx.send_ordinal));
      }
      return 0;
    }
    if (c < 1 || c > config.m || state.at(c) == 0) {
      throw Error(on_mismatch, "script names empty class " + std::to_string(c) +
                                   " at send #" + std::to_string(ctx.send_ordinal));
    }
    return c;
  };
}

Transcript run_greedy(const SwitchConfig& config, const EventSequence& seq) {
  return run(config, seq, greedy_scheduler());
}

std::vector<int> adv_script(const SwitchConfig& config) {
  validate_config(config);
  if (config.m < 2) {
    throw Error(Errc::degenerate_config, "construction needs m >= 2");
  }
  const int m = config.m;
  std::vector<int> script;

  // Construction phases: phase p (1-based) runs cap(m+1-p) slots and sends
  // class m-p at each of them; the last phase sends class 1.
  for (int p = 1; p <= m; ++p) {
    int slots = config.cap(m + 1 - p);
    int send_cls = (p < m) ? (m - p) : 1;
    script.insert(script.end(), static_cast<std::size_t>(slots), send_cls);
  }
  // Backlog after the phases: queues 2..m full. Drain highest class first,
  // then idle through the remaining drain slots.
  for (int c = m; c >= 2; --c) {
    script.insert(script.end(), static_cast<std::size_t>(config.cap(c)), c);
  }
  script.insert(script.end(), static_cast<std::size_t>(config.cap(1)), 0);
  return script;
}

Scheduler adv_schedule(const SwitchConfig& config) {
  return script_scheduler(adv_script(config), Errc::infeasible_script);
}

}  // namespace qsim
