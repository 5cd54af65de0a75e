#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "gcon/chambers.hpp"
#include "gcon/stability.hpp"
#include "gcon/stairs.hpp"
#include "gcon/tautological.hpp"

namespace gcon {

inline constexpr int kSchemaVersion = 1;

struct CountReport {
  GroupOrder k;
  long long stairs = 0;
  long long chambers = 0;
  long long simple_chambers = 0;
  std::map<int, long long> by_generators;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

CountReport count_report(GroupOrder k, Exec exec = Exec::parallel);

using Document =
    std::variant<Stair, RealizedStair, StabilityCondition, Chamber, FiberReport, CountReport>;

const char* document_kind(const Document& doc) noexcept;

/// One-line JSON with a fixed field order. Rationals are strings ("-4",
/// "2/3"), step words are strings over {R, D}. `derived` adds the stairs,
/// chamber stair and representative theta to chamber documents.
std::string emit_json(const Document& doc, bool derived = false);

/// Parses any document kind. "kind" may be omitted, in which case it is
/// inferred from the fields present. Errors: ErrorCode::parse_error for
/// malformed JSON or rationals, ErrorCode::schema_error for missing or
/// mistyped fields, plus whatever the value constructors raise (for
/// instance ErrorCode::theta_sum).
Document parse_json(std::string_view text);

template <class T>
T parse_json_as(std::string_view text);

extern template Stair parse_json_as<Stair>(std::string_view);
extern template RealizedStair parse_json_as<RealizedStair>(std::string_view);
extern template StabilityCondition parse_json_as<StabilityCondition>(std::string_view);
extern template Chamber parse_json_as<Chamber>(std::string_view);
extern template FiberReport parse_json_as<FiberReport>(std::string_view);
extern template CountReport parse_json_as<CountReport>(std::string_view);

}  // namespace gcon
