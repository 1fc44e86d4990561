#pragma once

#include <stdexcept>
#include <string>

namespace torcert {

enum class errc {
  input_mismatch,
  not_homogeneous,
  invalid_tolerance,
  not_a_series_unit,
  invalid_input,
  requires_finite_length,
  requires_degree_bound,
  not_regular_sequence,
  insufficient_window,
  criterion_inapplicable,
  tolerance_undecided,
  mathematical_discrepancy,
  parse_error,
  unknown_name,
};

const char* errc_name(errc c);

/// Library-wide exception: every error carries a machine-readable kind plus a
/// human-readable message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::input_mismatch: return "InputMismatch";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::invalid_tolerance: return "InvalidTolerance";
    case errc::not_a_series_unit: return "NotASeriesUnit";
    case errc::invalid_input: return "InvalidInput";
    case errc::requires_finite_length: return "RequiresFiniteLength";
    case errc::requires_degree_bound: return "RequiresDegreeBound";
    case errc::not_regular_sequence: return "NotRegularSequence";
    case errc::insufficient_window: return "InsufficientWindow";
    case errc::criterion_inapplicable: return "CriterionInapplicable";
    case errc::tolerance_undecided: return "ToleranceUndecided";
    case errc::mathematical_discrepancy: return "MathematicalDiscrepancy";
    case errc::parse_error: return "ParseError";
    case errc::unknown_name: return "UnknownName";
  }
  return "Error";
}

}  // namespace torcert
