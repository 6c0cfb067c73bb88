#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "qsim/model.hpp"

namespace qsim {

// Line-oriented instance format, UTF-8:
//
//   m <int>
//   values <rational> ... <rational>     rationals as `p/q` or `p`
//   caps <int> ... <int>
//   A <class>        one event per line
//   S
//
// Blank lines and lines starting with `#` are ignored. Anything else is a
// ParseError carrying the 1-based line number.
std::pair<SwitchConfig, EventSequence> parse_instance(std::istream& in);
std::pair<SwitchConfig, EventSequence> parse_instance_text(const std::string& text);
std::pair<SwitchConfig, EventSequence> load_instance(const std::string& path);

// Canonical rendering: header then one event per line, no comments. Parsing
// the output reproduces the instance byte for byte.
std::string format_instance(const SwitchConfig& config, const EventSequence& seq);
void save_instance(const std::string& path, const SwitchConfig& config,
                   const EventSequence& seq);

}  // namespace qsim
