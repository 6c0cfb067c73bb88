#include "qsim/sequence_io.hpp"

#include <cstdio>

#include "doctest.h"
#include "qsim/errors.hpp"
#include "qsim/lower_bound.hpp"
#include "qsim/random_instance.hpp"

using namespace qsim;

TEST_CASE("parses the canonical layout") {
  auto [config, seq] = parse_instance_text(
      "m 2\n"
      "values 1 3/2\n"
      "caps 1 2\n"
      "A 1\n"
      "A 2\n"
      "S\n");
  CHECK(config.m == 2);
  CHECK(config.values == std::vector<Rational>{1, Rational(3, 2)});
  CHECK(config.caps == std::vector<int>{1, 2});
  CHECK(seq == EventSequence{Event::arrive(1), Event::arrive(2), Event::send()});
}

TEST_CASE("comments and blank lines are ignored") {
  auto [config, seq] = parse_instance_text(
      "# instance\n"
      "\n"
      "m 1\n"
      "  # indented comment\n"
      "values 5\n"
      "caps 2\n"
      "\n"
      "A 1\n");
  CHECK(config.m == 1);
  CHECK(seq.size() == 1);
}

TEST_CASE("formatting is canonical and reparses identically") {
  SwitchConfig config;
  config.m = 2;
  config.values = {1, 2};
  config.caps = {1, 2};
  EventSequence seq = generate_lower_bound_sequence(config);

  std::string text = format_instance(config, seq);
  CHECK(text ==
        "m 2\n"
        "values 1 2\n"
        "caps 1 2\n"
        "A 1\nA 2\nA 2\nS\nA 1\nS\nA 1\nS\nS\nS\nS\n");
  auto [config2, seq2] = parse_instance_text(text);
  CHECK(config2 == config);
  CHECK(seq2 == seq);
  // byte-exact fixpoint
  CHECK(format_instance(config2, seq2) == text);
}

TEST_CASE("round trip across random instances") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = random_instance(seed);
    auto [config, seq] = parse_instance_text(format_instance(inst.config, inst.sequence));
    CHECK(config == inst.config);
    CHECK(seq == inst.sequence);
  }
}

TEST_CASE("errors carry the offending line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse_instance_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    FAIL("expected a parse error");
    return -1;
  };

  CHECK(line_of("q 2\n") == 1);
  CHECK(line_of("m x\n") == 1);
  CHECK(line_of("m 0\n") == 1);
  CHECK(line_of("m 2\nvalues 1\n") == 2);
  CHECK(line_of("m 2\nvalues 1 x\n") == 2);
  CHECK(line_of("m 2\nvalues 1 2\ncaps 1\n") == 3);
  CHECK(line_of("m 2\nvalues 2 1\ncaps 1 1\n") == 3);  // config invariant at caps line
  CHECK(line_of("m 2\nvalues 1 2\ncaps 1 2\nA 3\n") == 4);
  CHECK(line_of("m 2\nvalues 1 2\ncaps 1 2\nA\n") == 4);
  CHECK(line_of("m 2\nvalues 1 2\ncaps 1 2\nS extra\n") == 4);
  CHECK(line_of("# only a comment\n") == 1);  // incomplete header
  CHECK(line_of("m 2\nvalues 1 2\n") == 2);   // header cut short
}

TEST_CASE("file round trip") {
  SwitchConfig config;
  config.m = 2;
  config.values = {1, 2};
  config.caps = {1, 1};
  EventSequence seq{Event::arrive(1), Event::send()};
  std::string path = "qsim_io_test.seq";
  save_instance(path, config, seq);
  auto [config2, seq2] = load_instance(path);
  CHECK(config2 == config);
  CHECK(seq2 == seq);
  std::remove(path.c_str());
}

TEST_CASE("missing file is a parse error") {
  CHECK_THROWS_AS(load_instance("definitely/not/here.seq"), ParseError);
}
