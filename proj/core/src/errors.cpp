#include "qsim/errors.hpp"

namespace qsim {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_config:
      return "EmptyConfig";
    case Errc::non_increasing_values:
      return "NonIncreasingValues";
    case Errc::non_positive_value:
      return "NonPositiveValue";
    case Errc::zero_capacity:
      return "ZeroCapacity";
    case Errc::invalid_class:
      return "InvalidClass";
    case Errc::choice_required:
      return "ChoiceRequired";
    case Errc::send_from_empty_queue:
      return "SendFromEmptyQueue";
    case Errc::all_queues_empty:
      return "AllQueuesEmpty";
    case Errc::infeasible_script:
      return "InfeasibleScript";
    case Errc::budget_exceeded:
      return "BudgetExceeded";
    case Errc::witness_mismatch:
      return "WitnessMismatch";
    case Errc::transcript_mismatch:
      return "TranscriptMismatch";
    case Errc::violation_found:
      return "ViolationFound";
    case Errc::degenerate_config:
      return "DegenerateConfig";
    case Errc::not_argmax_ell:
      return "NotArgmaxEll";
    case Errc::empty_bounds:
      return "EmptyBounds";
    case Errc::numeric_overflow:
      return "NumericOverflow";
    case Errc::parse_error:
      return "ParseError";
  }
  return "UnknownError";
}

}  // namespace qsim
