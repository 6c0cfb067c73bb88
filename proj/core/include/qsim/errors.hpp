#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

// Failure codes used across the library. Each names the precondition or
// invariant that was violated.
enum class Errc {
  // configuration
  empty_config,
  non_increasing_values,
  non_positive_value,
  zero_capacity,
  // single-step semantics
  invalid_class,
  choice_required,
  send_from_empty_queue,
  // policies
  all_queues_empty,
  infeasible_script,
  // offline oracle
  budget_exceeded,
  witness_mismatch,
  // analysis
  transcript_mismatch,
  violation_found,
  // generators
  degenerate_config,
  not_argmax_ell,
  empty_bounds,
  // numerics / io
  numeric_overflow,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failure with the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(Errc::parse_error,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qsim
