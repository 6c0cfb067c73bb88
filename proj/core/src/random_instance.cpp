#include "qsim/random_instance.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

void validate_bounds(const RandomBounds& b) {
  bool ok = b.m_min >= 1 && b.m_min <= b.m_max && b.cap_min >= 1 &&
            b.cap_min <= b.cap_max && b.max_events >= 0 && b.value_num_max >= 1 &&
            b.value_den_max >= 1 && b.arrive_prob_min >= 0.0 &&
            b.arrive_prob_min <= b.arrive_prob_max && b.arrive_prob_max <= 1.0;
  if (!ok) {
    throw Error(Errc::empty_bounds, "generation bounds describe an empty range");
  }
}

// Uniform integer draw without std::uniform_int_distribution, whose output
// is not pinned across standard libraries. Rejection sampling keeps the
// draw exactly uniform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance random_instance(std::uint64_t seed, const RandomBounds& bounds) {
  validate_bounds(bounds);
  std::mt19937_64 rng(seed);

  Instance inst;
  inst.seed = seed;
  SwitchConfig& config = inst.config;
  config.m = draw_int(rng, bounds.m_min, bounds.m_max);

  // Distinct sorted positive rationals. The candidate space is far larger
  // than m for any sane bounds, so the loop terminates quickly.
  std::set<Rational> drawn;
  while (static_cast<int>(drawn.size()) < config.m) {
    int num = draw_int(rng, 1, bounds.value_num_max);
    int den = draw_int(rng, 1, bounds.value_den_max);
    drawn.insert(Rational(num, den));
  }
  config.values.assign(drawn.begin(), drawn.end());

  for (int c = 0; c < config.m; ++c) {
    config.caps.push_back(draw_int(rng, bounds.cap_min, bounds.cap_max));
  }
  validate_config(config);

  int len = bounds.max_events == 0 ? 0 : draw_int(rng, 0, bounds.max_events);
  double arrive_prob = bounds.arrive_prob_min +
                       (bounds.arrive_prob_max - bounds.arrive_prob_min) * draw_unit(rng);
  for (int i = 0; i < len; ++i) {
    if (draw_unit(rng) < arrive_prob) {
      inst.sequence.push_back(Event::arrive(draw_int(rng, 1, config.m)));
    } else {
      inst.sequence.push_back(Event::send());
    }
  }
  return inst;
}

}  // namespace qsim
