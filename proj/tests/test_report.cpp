#include "qsim/report.hpp"

#include "doctest.h"
#include "qsim/lower_bound.hpp"
#include "qsim/policies.hpp"

using namespace qsim;

namespace {

SwitchConfig lb_config() {
  SwitchConfig c;
  c.m = 2;
  c.values = {1, 2};
  c.caps = {1, 2};
  return c;
}

}  // namespace

TEST_CASE("rationals render as exact plus decimal") {
  Json j = to_json(Rational(7, 5));
  CHECK(j.dump() == R"({"exact":"7/5","decimal":"1.400000"})");
}

TEST_CASE("config json shape") {
  Json j = to_json(lb_config());
  CHECK(j.dump() == R"({"m":2,"values":["1","2"],"caps":[1,2]})");
}

TEST_CASE("verdict json carries slack only when meaningful") {
  Verdict v;
  v.check = "competitive-bound";
  v.slack = Rational(1, 10);
  Json j = to_json(v);
  CHECK(j["verdict"] == "pass");
  CHECK(j["slack"]["exact"] == "1/10");

  Verdict bad;
  bad.check = "competitive-bound";
  bad.pass = false;
  bad.detail = "ratio 2 vs bound 3/2";
  Json jb = to_json(bad);
  CHECK(jb["verdict"] == "fail");
  CHECK(jb.find("slack") == jb.end());
  CHECK(jb["detail"] == "ratio 2 vs bound 3/2");
}

TEST_CASE("csv rows match the documented columns") {
  SwitchConfig config = lb_config();
  BenefitReport report = competitive_report(config, generate_lower_bound_sequence(config));
  CHECK(csv_header() == "seed,m,caps,ratio,bound,slack,verdict");
  CHECK(csv_row(42, config, report) == "42,2,1|2,1.400000,1.500000,0.100000,pass");
}

TEST_CASE("reports are byte-stable") {
  SwitchConfig config = lb_config();
  BenefitReport report = competitive_report(config, generate_lower_bound_sequence(config));
  CHECK(to_json(report).dump() == to_json(report).dump());
  Transcript t = run_greedy(config, generate_lower_bound_sequence(config));
  CHECK(to_json(t).dump() == to_json(t).dump());
}
