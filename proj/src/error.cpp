#include "gcon/error.hpp"

namespace gcon {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::degenerate_group: return "degenerate_group";
    case ErrorCode::bad_step_word: return "bad_step_word";
    case ErrorCode::irrep_mismatch: return "irrep_mismatch";
    case ErrorCode::out_of_quadrant: return "out_of_quadrant";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::offset_out_of_range: return "offset_out_of_range";
    case ErrorCode::invalid_cut: return "invalid_cut";
    case ErrorCode::not_generic: return "not_generic";
    case ErrorCode::not_a_window: return "not_a_window";
    case ErrorCode::not_in_ideal: return "not_in_ideal";
    case ErrorCode::bad_chart: return "bad_chart";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::schema_error: return "schema_error";
    case ErrorCode::theta_sum: return "theta_sum";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace gcon
