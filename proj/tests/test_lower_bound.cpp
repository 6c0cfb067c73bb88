#include "qsim/lower_bound.hpp"

#include "doctest.h"
#include "qsim/errors.hpp"
#include "qsim/oracle.hpp"
#include "qsim/policies.hpp"
#include "qsim/random_instance.hpp"

using namespace qsim;

namespace {

SwitchConfig cfg(std::vector<Rational> values, std::vector<int> caps) {
  SwitchConfig c;
  c.m = static_cast<int>(values.size());
  c.values = std::move(values);
  c.caps = std::move(caps);
  return c;
}

EventSequence events(const std::string& compact) {
  // "1 2 . 1" -> A1 A2 S A1
  EventSequence seq;
  for (char ch : compact) {
    if (ch == ' ') {
      continue;
    }
    if (ch == '.') {
      seq.push_back(Event::send());
    } else {
      seq.push_back(Event::arrive(ch - '0'));
    }
  }
  return seq;
}

SwitchConfig grid_config(int m, const std::vector<int>& caps) {
  std::vector<Rational> values;
  for (int c = 0; c < m; ++c) {
    values.push_back(Rational(1 << c));
  }
  return cfg(values, caps);
}

}  // namespace

TEST_CASE("generated sequence matches the slot layout") {
  CHECK(generate_lower_bound_sequence(cfg({1, 2}, {1, 2})) ==
        events("1 2 2 . 1 . 1 . . . ."));
  CHECK(generate_lower_bound_sequence(cfg({1, 2}, {1, 1})) == events("1 2 . 1 . . ."));
}

TEST_CASE("single-class configs are rejected") {
  try {
    generate_lower_bound_sequence(cfg({5}, {2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_config);
  }
}

TEST_CASE("closed forms") {
  CHECK(greedy_benefit_closed_form(cfg({1, 2}, {1, 2})) == Rational(5));
  CHECK(greedy_benefit_closed_form(cfg({1, 2, 4}, {1, 1, 1})) == Rational(7));
  CHECK(greedy_benefit_closed_form(cfg({1, 2}, {1, 1})) == Rational(3));

  CHECK(adv_benefit_closed_form(cfg({1, 2}, {1, 2})) == Rational(7));
  CHECK(adv_benefit_closed_form(cfg({1, 2}, {1, 1})) == Rational(4));
  CHECK(adv_benefit_closed_form(cfg({1, 2, 4}, {1, 1, 1})) == Rational(10));
}

TEST_CASE("ratio approaches one plus the adjacent value ratio") {
  std::vector<Rational> v{1, 2};
  CHECK(ratio_limit_demo(v, 1, 1) == Rational(4, 3));
  CHECK(ratio_limit_demo(v, 1, 100) == Rational(301, 201));
  CHECK(ratio_limit_demo(v, 1, 10000) == Rational(30001, 20001));

  // monotone nondecreasing toward 3/2, within 1e-4 at K = 1e4
  Rational bound(3, 2);
  Rational prev = 0;
  for (int k : {1, 10, 100, 10000}) {
    Rational q = ratio_limit_demo(v, 1, k);
    CHECK(prev <= q);
    CHECK(q <= bound);
    prev = q;
  }
  CHECK(bound - prev < Rational(1, 10000));
}

TEST_CASE("ell must attain the max adjacent ratio") {
  std::vector<Rational> v{1, 2, 10};  // ratios 1/2 and 1/5
  CHECK_NOTHROW(ratio_limit_demo(v, 1, 5));
  try {
    ratio_limit_demo(v, 2, 5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_argmax_ell);
  }
}

TEST_CASE("simulated policies match the closed forms on a cap grid") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<int> caps(static_cast<std::size_t>(m), 1);
    while (true) {
      SwitchConfig config = grid_config(m, caps);
      PhasePlan plan = lower_bound_plan(config);
      EventSequence seq = plan.expand();

      Transcript greedy_t = run_greedy(config, seq);
      CHECK(greedy_t.benefit() == greedy_benefit_closed_form(config));
      Transcript adv_t = run(config, seq, adv_schedule(config));
      CHECK(adv_t.benefit() == adv_benefit_closed_form(config));
      CHECK(adv_t.final_state().all_empty());
      // every adversary queue is full right after the final arrival
      CHECK(adv_t.entries[plan.last_arrival_index()].after.occupancy == config.caps);

      // greedy queue shape at the end of phase p: bottom m-p queues full,
      // the rest already drained
      std::vector<std::size_t> ends = plan.phase_end_indices();
      for (int p = 1; p <= m; ++p) {
        const QueueState& qs = greedy_t.entries[ends[static_cast<std::size_t>(p) - 1]].after;
        for (int c = 1; c <= m; ++c) {
          CHECK(qs.at(c) == (c <= m - p ? config.cap(c) : 0));
        }
      }

      // advance the cap tuple through [1,4]^m
      int i = 0;
      while (i < m && caps[static_cast<std::size_t>(i)] == 4) {
        caps[static_cast<std::size_t>(i)] = 1;
        ++i;
      }
      if (i == m) {
        break;
      }
      ++caps[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("the exact optimum is at least the scripted adversary") {
  for (int m = 2; m <= 3; ++m) {
    std::vector<int> caps(static_cast<std::size_t>(m), 1);
    while (true) {
      SwitchConfig config = grid_config(m, caps);
      EventSequence seq = generate_lower_bound_sequence(config);
      OptResult opt = brute_force_opt(config, seq);
      CHECK(adv_benefit_closed_form(config) <= opt.benefit);
      CHECK(greedy_benefit_closed_form(config) <= opt.benefit);

      int i = 0;
      while (i < m && caps[static_cast<std::size_t>(i)] == 3) {
        caps[static_cast<std::size_t>(i)] = 1;
        ++i;
      }
      if (i == m) {
        break;
      }
      ++caps[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("random instances are deterministic and within bounds") {
  RandomBounds bounds;
  Instance a = random_instance(0, bounds);
  Instance b = random_instance(0, bounds);
  CHECK(a.config == b.config);
  CHECK(a.sequence == b.sequence);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = random_instance(seed, bounds);
    CHECK(inst.config.m >= bounds.m_min);
    CHECK(inst.config.m <= bounds.m_max);
    CHECK(static_cast<int>(inst.sequence.size()) <= bounds.max_events);
    for (int c = 1; c <= inst.config.m; ++c) {
      CHECK(inst.config.cap(c) >= bounds.cap_min);
      CHECK(inst.config.cap(c) <= bounds.cap_max);
    }
    CHECK_NOTHROW(validate_config(inst.config));
    CHECK_NOTHROW(validate_sequence(inst.config, inst.sequence));
  }
}

TEST_CASE("zero-length bound yields an empty sequence") {
  RandomBounds bounds;
  bounds.max_events = 0;
  CHECK(random_instance(3, bounds).sequence.empty());
}

TEST_CASE("inverted bounds are rejected") {
  RandomBounds bounds;
  bounds.m_min = 5;
  bounds.m_max = 2;
  try {
    random_instance(0, bounds);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_bounds);
  }
}
