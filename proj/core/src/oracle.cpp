#include "qsim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qsim/errors.hpp"
#include "qsim/policies.hpp"

namespace qsim {

namespace {

using std::int64_t;
using std::size_t;
using Wide = __int128;

// Packet values scaled to integers by the common denominator, so the DP
// compares benefits in plain integer arithmetic.
struct ScaledValues {
  std::vector<int64_t> weight;  // weight[c-1] = value(c) * common_den
  int64_t common_den = 1;
};

ScaledValues scale_values(const SwitchConfig& config) {
  ScaledValues sv;
  for (const Rational& v : config.values) {
    sv.common_den = std::lcm(sv.common_den, v.den());
  }
  for (const Rational& v : config.values) {
    Wide w = static_cast<Wide>(v.num()) * (sv.common_den / v.den());
    if (w > std::numeric_limits<int64_t>::max()) {
      throw Error(Errc::numeric_overflow, "scaled packet value exceeds 64-bit range");
    }
    sv.weight.push_back(static_cast<int64_t>(w));
  }
  return sv;
}

void check_benefit_range(const EventSequence& seq, const ScaledValues& sv) {
  Wide total = 0;
  for (const Event& e : seq) {
    if (e.is_arrive()) {
      total += sv.weight[static_cast<size_t>(e.cls) - 1];
    }
  }
  if (total > std::numeric_limits<int64_t>::max() / 2) {
    throw Error(Errc::numeric_overflow, "total sequence value exceeds 64-bit range");
  }
}

// Dense table over (event layer, packed occupancy). Layer L holds the best
// continuation from just before event L.
struct DpTable {
  int m = 0;
  size_t occ_count = 0;
  std::vector<size_t> stride;       // mixed-radix packing of occupancies
  std::vector<int64_t> benefit;     // max future benefit (scaled)
  std::vector<std::uint16_t> canon;  // lex-max future profile among optima
  std::vector<std::uint16_t> anti;   // lex-min future profile among optima
  std::vector<std::uint32_t> maxtop;  // max future top-class accepts, any schedule

  size_t node(size_t layer, size_t packed) const { return layer * occ_count + packed; }

  int occ_of(size_t packed, int cls, const SwitchConfig& config) const {
    size_t radix = static_cast<size_t>(config.caps[static_cast<size_t>(cls) - 1]) + 1;
    return static_cast<int>(packed / stride[static_cast<size_t>(cls) - 1] % radix);
  }

  const std::uint16_t* profile(const std::vector<std::uint16_t>& table, size_t node_id) const {
    return table.data() + node_id * static_cast<size_t>(m);
  }
  std::uint16_t* profile(std::vector<std::uint16_t>& table, size_t node_id) const {
    return table.data() + node_id * static_cast<size_t>(m);
  }

  // a > b comparing acceptance counts from the top class down.
  bool lex_greater(const std::vector<std::uint16_t>& table, size_t a, size_t b) const {
    const std::uint16_t* pa = profile(table, a);
    const std::uint16_t* pb = profile(table, b);
    for (int c = m - 1; c >= 0; --c) {
      if (pa[c] != pb[c]) {
        return pa[c] > pb[c];
      }
    }
    return false;
  }

  void copy_node(size_t dst, size_t src) {
    benefit[dst] = benefit[src];
    maxtop[dst] = maxtop[src];
    std::copy_n(profile(canon, src), m, profile(canon, dst));
    std::copy_n(profile(anti, src), m, profile(anti, dst));
  }
};

}  // namespace

OptResult brute_force_opt(const SwitchConfig& config, const EventSequence& seq,
                          size_t state_budget) {
  validate_config(config);
  validate_sequence(config, seq);
  ScaledValues sv = scale_values(config);
  check_benefit_range(seq, sv);

  const int m = config.m;
  const size_t len = seq.size();
  if (len > 65535) {
    // acceptance counts are tracked in 16 bits
    throw Error(Errc::budget_exceeded, "sequences beyond 65535 events are unsupported");
  }

  DpTable dp;
  dp.m = m;
  size_t occ_count = 1;
  for (int c = 0; c < m; ++c) {
    dp.stride.push_back(occ_count);
    size_t radix = static_cast<size_t>(config.caps[static_cast<size_t>(c)]) + 1;
    if (occ_count > state_budget / radix) {
      throw Error(Errc::budget_exceeded, "occupancy space alone exceeds the state budget");
    }
    occ_count *= radix;
  }
  dp.occ_count = occ_count;
  if (len + 1 > state_budget / occ_count) {
    throw Error(Errc::budget_exceeded,
                "state space " + std::to_string(occ_count) + " x " + std::to_string(len + 1) +
                    " exceeds budget " + std::to_string(state_budget));
  }
  const size_t states = occ_count * (len + 1);

  dp.benefit.assign(states, 0);
  dp.canon.assign(states * static_cast<size_t>(m), 0);
  dp.anti.assign(states * static_cast<size_t>(m), 0);
  dp.maxtop.assign(states, 0);

  for (size_t layer = len; layer-- > 0;) {
    const Event& event = seq[layer];
    for (size_t packed = 0; packed < occ_count; ++packed) {
      size_t self = dp.node(layer, packed);

      if (event.is_arrive()) {
        int c = event.cls;
        bool room = dp.occ_of(packed, c, config) < config.cap(c);
        size_t child =
            dp.node(layer + 1, room ? packed + dp.stride[static_cast<size_t>(c) - 1] : packed);
        dp.copy_node(self, child);
        if (room) {
          dp.benefit[self] += sv.weight[static_cast<size_t>(c) - 1];
          dp.profile(dp.canon, self)[c - 1] += 1;
          dp.profile(dp.anti, self)[c - 1] += 1;
          if (c == m) {
            dp.maxtop[self] += 1;
          }
        }
        continue;
      }

      if (packed == 0) {  // send with every queue empty: forced idle
        dp.copy_node(self, dp.node(layer + 1, 0));
        continue;
      }

      // Diligent send: one child per nonempty class. Scanned from the top
      // class down; exact ties keep the higher class, which makes the
      // witness walk deterministic.
      bool first = true;
      size_t best = 0;
      std::uint32_t top = 0;
      for (int c = m; c >= 1; --c) {
        if (dp.occ_of(packed, c, config) == 0) {
          continue;
        }
        size_t child = dp.node(layer + 1, packed - dp.stride[static_cast<size_t>(c) - 1]);
        top = std::max(top, dp.maxtop[child]);
        if (first || dp.benefit[child] > dp.benefit[best] ||
            (dp.benefit[child] == dp.benefit[best] && dp.lex_greater(dp.canon, child, best))) {
          best = child;
        }
        first = false;
      }
      dp.benefit[self] = dp.benefit[best];
      std::copy_n(dp.profile(dp.canon, best), m, dp.profile(dp.canon, self));
      dp.maxtop[self] = top;

      // Anti witness: lex-min profile among maximum-benefit children.
      bool anti_first = true;
      size_t anti_best = 0;
      for (int c = m; c >= 1; --c) {
        if (dp.occ_of(packed, c, config) == 0) {
          continue;
        }
        size_t child = dp.node(layer + 1, packed - dp.stride[static_cast<size_t>(c) - 1]);
        if (dp.benefit[child] != dp.benefit[self]) {
          continue;
        }
        if (anti_first || dp.lex_greater(dp.anti, anti_best, child)) {
          anti_best = child;
        }
        anti_first = false;
      }
      std::copy_n(dp.profile(dp.anti, anti_best), m, dp.profile(dp.anti, self));
    }
  }

  // Forward walk re-applying the argmax rule reconstructs the canonical
  // witness schedule.
  OptResult out;
  out.states = states;
  size_t packed = 0;
  for (size_t i = 0; i < len; ++i) {
    const Event& event = seq[i];
    if (event.is_arrive()) {
      int c = event.cls;
      if (dp.occ_of(packed, c, config) < config.cap(c)) {
        packed += dp.stride[static_cast<size_t>(c) - 1];
      }
      continue;
    }
    if (packed == 0) {
      out.witness.push_back(0);
      continue;
    }
    int pick = 0;
    size_t pick_child = 0;
    for (int c = m; c >= 1; --c) {
      if (dp.occ_of(packed, c, config) == 0) {
        continue;
      }
      size_t child = dp.node(i + 1, packed - dp.stride[static_cast<size_t>(c) - 1]);
      if (pick == 0 || dp.benefit[child] > dp.benefit[pick_child] ||
          (dp.benefit[child] == dp.benefit[pick_child] &&
           dp.lex_greater(dp.canon, child, pick_child))) {
        pick = c;
        pick_child = child;
      }
    }
    out.witness.push_back(pick);
    packed -= dp.stride[static_cast<size_t>(pick) - 1];
  }

  size_t root = dp.node(0, 0);
  out.benefit = Rational(dp.benefit[root], sv.common_den);
  for (int k = 0; k < m; ++k) {
    out.accepted.push_back(dp.profile(dp.canon, root)[k]);
    out.min_accepted.push_back(dp.profile(dp.anti, root)[k]);
  }
  out.max_top_class_accepts = static_cast<int>(dp.maxtop[root]);
  return out;
}

Transcript optimal_transcript(const SwitchConfig& config, const EventSequence& seq,
                              const OptResult& opt) {
  size_t sends = static_cast<size_t>(
      std::count_if(seq.begin(), seq.end(), [](const Event& e) { return e.is_send(); }));
  if (sends != opt.witness.size()) {
    throw Error(Errc::witness_mismatch,
                "witness covers " + std::to_string(opt.witness.size()) +
                    " sends, sequence has " + std::to_string(sends));
  }
  Transcript t;
  try {
    t = run(config, seq, script_scheduler(opt.witness, Errc::witness_mismatch));
  } catch (const Error& e) {
    if (e.code() == Errc::witness_mismatch) {
      throw;
    }
    throw Error(Errc::witness_mismatch, e.what());
  }
  if (t.accepted != opt.accepted || t.benefit() != opt.benefit) {
    throw Error(Errc::witness_mismatch, "replay disagrees with the search result");
  }
  return t;
}

Rational relaxed_opt_benefit(const SwitchConfig& config, const EventSequence& seq) {
  validate_config(config);
  validate_sequence(config, seq);
  ScaledValues sv = scale_values(config);
  check_benefit_range(seq, sv);

  size_t sends = static_cast<size_t>(
      std::count_if(seq.begin(), seq.end(), [](const Event& e) { return e.is_send(); }));
  double paths = 1.0;
  for (size_t i = 0; i < sends; ++i) {
    paths *= static_cast<double>(config.m) + 1.0;
    if (paths > 2.0e7) {
      throw Error(Errc::budget_exceeded, "relaxed enumeration would explore over 2e7 schedules");
    }
  }

  std::vector<int> occ(static_cast<size_t>(config.m), 0);
  auto rec = [&](auto&& self, size_t pos) -> int64_t {
    if (pos == seq.size()) {
      return 0;
    }
    const Event& e = seq[pos];
    if (e.is_arrive()) {
      size_t c = static_cast<size_t>(e.cls) - 1;
      if (occ[c] < config.caps[c]) {
        ++occ[c];
        int64_t v = sv.weight[c] + self(self, pos + 1);
        --occ[c];
        return v;
      }
      return self(self, pos + 1);
    }
    int64_t best = self(self, pos + 1);  // idle is always on the menu here
    for (size_t c = 0; c < occ.size(); ++c) {
      if (occ[c] > 0) {
        --occ[c];
        best = std::max(best, self(self, pos + 1));
        ++occ[c];
      }
    }
    return best;
  };
  return Rational(rec(rec, 0), sv.common_den);
}

}  // namespace qsim
