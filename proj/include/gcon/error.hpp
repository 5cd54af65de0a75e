#pragma once

#include <stdexcept>
#include <string>

namespace gcon {

enum class ErrorCode {
  degenerate_group,
  bad_step_word,
  irrep_mismatch,
  out_of_quadrant,
  dimension_mismatch,
  offset_out_of_range,
  invalid_cut,
  not_generic,
  not_a_window,
  not_in_ideal,
  bad_chart,
  parse_error,
  schema_error,
  theta_sum,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can tell them apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcon
