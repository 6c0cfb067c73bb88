#include "qsim/report.hpp"

#include <sstream>

namespace qsim {

Json to_json(const Rational& r) {
  return Json{{"exact", r.str()}, {"decimal", r.decimal()}};
}

Json to_json(const SwitchConfig& config) {
  Json values = Json::array();
  for (const Rational& v : config.values) {
    values.push_back(v.str());
  }
  return Json{{"m", config.m}, {"values", values}, {"caps", config.caps}};
}

Json to_json(const Verdict& v) {
  Json j{{"check", v.check},
         {"verdict", v.vacuous ? "vacuous" : (v.pass ? "pass" : "fail")}};
  if (!v.vacuous && v.pass) {
    j["slack"] = to_json(v.slack);
  }
  if (!v.detail.empty()) {
    j["detail"] = v.detail;
  }
  return j;
}

Json to_json(const CheckSummary& s) {
  Json j{{"check", s.check},
         {"passed", s.passed},
         {"failed", s.failed},
         {"vacuous", s.vacuous}};
  if (s.has_slack) {
    j["min_slack"] = to_json(s.min_slack);
  }
  return j;
}

Json to_json(const BenefitReport& r) {
  return Json{{"greedy_accepted", r.greedy_accepted},
              {"opt_accepted", r.opt_accepted},
              {"greedy_benefit", to_json(r.greedy_benefit)},
              {"opt_benefit", to_json(r.opt_benefit)},
              {"ratio", to_json(r.ratio)},
              {"max_adjacent_ratio", to_json(r.max_adjacent_ratio)},
              {"bound", to_json(r.bound)},
              {"slack", to_json(r.slack)},
              {"within_bound", r.within_bound}};
}

Json to_json(const Transcript& t) {
  int rejected = 0;
  for (const TranscriptEntry& e : t.entries) {
    rejected += e.outcome.is_rejected();
  }
  return Json{{"events", t.entries.size()},
              {"accepted", t.accepted},
              {"rejected", rejected},
              {"sent", t.sent},
              {"idle_sends", t.idle_sends},
              {"benefit", to_json(t.benefit())},
              {"transmitted_value", to_json(t.transmitted_value())},
              {"final_occupancy", t.final_state().occupancy}};
}

std::string csv_header() { return "seed,m,caps,ratio,bound,slack,verdict"; }

std::string csv_row(std::uint64_t seed, const SwitchConfig& config,
                    const BenefitReport& report) {
  std::ostringstream out;
  out << seed << ',' << config.m << ',';
  for (std::size_t i = 0; i < config.caps.size(); ++i) {
    if (i > 0) {
      out << '|';
    }
    out << config.caps[i];
  }
  out << ',' << report.ratio.decimal() << ',' << report.bound.decimal() << ','
      << report.slack.decimal() << ',' << (report.within_bound ? "pass" : "fail");
  return out.str();
}

}  // namespace qsim
