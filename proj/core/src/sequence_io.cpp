#include "qsim/sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return value;
}

Rational parse_rational(const std::string& tok, int line_no) {
  try {
    return Rational::parse(tok);
  } catch (const Error&) {
    throw ParseError(line_no, "expected rational (p or p/q), got '" + tok + "'");
  }
}

}  // namespace

std::pair<SwitchConfig, EventSequence> parse_instance(std::istream& in) {
  SwitchConfig config;
  EventSequence seq;
  int header = 0;  // 0: expect m, 1: expect values, 2: expect caps, 3: events
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::vector<std::string> tok = tokenize(line);

    switch (header) {
      case 0:
        if (tok.size() != 2 || tok[0] != "m") {
          throw ParseError(line_no, "expected 'm <int>'");
        }
        config.m = parse_int(tok[1], line_no, "for m");
        if (config.m < 1) {
          throw ParseError(line_no, "m must be >= 1");
        }
        header = 1;
        break;
      case 1: {
        if (tok.empty() || tok[0] != "values" ||
            tok.size() != static_cast<std::size_t>(config.m) + 1) {
          throw ParseError(line_no, "expected 'values' followed by " +
                                        std::to_string(config.m) + " rationals");
        }
        for (std::size_t i = 1; i < tok.size(); ++i) {
          config.values.push_back(parse_rational(tok[i], line_no));
        }
        header = 2;
        break;
      }
      case 2: {
        if (tok.empty() || tok[0] != "caps" ||
            tok.size() != static_cast<std::size_t>(config.m) + 1) {
          throw ParseError(line_no, "expected 'caps' followed by " +
                                        std::to_string(config.m) + " integers");
        }
        for (std::size_t i = 1; i < tok.size(); ++i) {
          config.caps.push_back(parse_int(tok[i], line_no, "capacity"));
        }
        try {
          validate_config(config);
        } catch (const Error& e) {
          throw ParseError(line_no, e.what());
        }
        header = 3;
        break;
      }
      default: {
        if (tok.size() == 1 && tok[0] == "S") {
          seq.push_back(Event::send());
        } else if (tok.size() == 2 && tok[0] == "A") {
          int cls = parse_int(tok[1], line_no, "class");
          if (cls < 1 || cls > config.m) {
            throw ParseError(line_no, "class " + std::to_string(cls) +
                                          " outside [1, " + std::to_string(config.m) + "]");
          }
          seq.push_back(Event::arrive(cls));
        } else {
          throw ParseError(line_no, "expected 'A <class>' or 'S', got '" + line + "'");
        }
        break;
      }
    }
  }
  if (header != 3) {
    throw ParseError(line_no, "incomplete header (need m, values, caps)");
  }
  return {std::move(config), std::move(seq)};
}

std::pair<SwitchConfig, EventSequence> parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::pair<SwitchConfig, EventSequence> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "'");
  }
  return parse_instance(in);
}

std::string format_instance(const SwitchConfig& config, const EventSequence& seq) {
  std::ostringstream out;
  out << "m " << config.m << "\n";
  out << "values";
  for (const Rational& v : config.values) {
    out << " " << v.str();
  }
  out << "\n";
  out << "caps";
  for (int b : config.caps) {
    out << " " << b;
  }
  out << "\n";
  for (const Event& e : seq) {
    out << to_string(e) << "\n";
  }
  return out.str();
}

void save_instance(const std::string& path, const SwitchConfig& config,
                   const EventSequence& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError(0, "cannot write '" + path + "'");
  }
  out << format_instance(config, seq);
}

}  // namespace qsim
