#include "gcon/json_io.hpp"

#include <json.hpp>

#include "gcon/error.hpp"

namespace gcon {

using json = nlohmann::ordered_json;

CountReport count_report(GroupOrder k, Exec exec) {
  CountReport r{k, 0, 0, 0, {}};
  r.stairs = static_cast<long long>(enumerate_stairs(k, exec).size());
  r.chambers = static_cast<long long>(enumerate_chambers(k, exec).size());
  r.simple_chambers = static_cast<long long>(enumerate_simple_chambers(k, exec).size());
  r.by_generators = count_by_generators(k, exec);
  return r;
}

const char* document_kind(const Document& doc) noexcept {
  static constexpr const char* kinds[] = {"stair",   "realized_stair", "theta",
                                          "chamber", "fiber_report",   "count_report"};
  return kinds[doc.index()];
}

namespace {

// ---- emit -----------------------------------------------------------------

json header(const char* kind, GroupOrder k) {
  json j;
  j["kind"] = kind;
  j["schema_version"] = kSchemaVersion;
  j["k"] = k.value();
  return j;
}

json stair_body(const Stair& s) {
  json j;
  j["first_rep"] = s.first_rep().index;
  j["steps"] = to_string(s.steps());
  return j;
}

json monomial_json(Monomial m) { return json::array({m.a, m.b}); }

json theta_values(const StabilityCondition& theta) {
  json v = json::array();
  for (const auto& x : theta.values()) v.push_back(format_rational(x));
  return v;
}

json to_json(const Stair& s) {
  json j = header("stair", s.order());
  j.update(stair_body(s));
  return j;
}

json to_json(const RealizedStair& r) {
  json j = header("realized_stair", r.stair().order());
  j.update(stair_body(r.stair()));
  j["anchor"] = monomial_json(r.anchor());
  return j;
}

json to_json(const StabilityCondition& theta) {
  json j = header("theta", theta.order());
  j["values"] = theta_values(theta);
  return j;
}

json to_json(const Chamber& c, bool derived) {
  json j = header("chamber", c.order());
  j["first_rep"] = c.first_rep().index;
  j["offsets"] = c.offsets();
  if (derived) {
    json stairs = json::array();
    for (const Stair& s : c.stairs()) stairs.push_back(stair_body(s));
    j["stairs"] = std::move(stairs);
    json cs = stair_body(c.chamber_stair());
    cs["anchor"] = monomial_json(c.realized_chamber_stair().anchor());
    j["chamber_stair"] = std::move(cs);
    j["theta"] = theta_values(c.representative());
  }
  return j;
}

json to_json(const FiberReport& r) {
  json j = header("fiber_report", r.k);
  j["first_rep"] = r.first_rep.index;
  j["offsets"] = r.offsets;
  j["pass"] = r.pass;
  json charts = json::array();
  for (const ChartCheck& c : r.charts) {
    json cj;
    cj["j"] = c.j;
    cj["pass"] = c.pass;
    json surv = json::array();
    for (Monomial m : c.survivors) surv.push_back(monomial_json(m));
    cj["survivors"] = std::move(surv);
    cj["expected"] = stair_body(c.expected);
    cj["found"] = c.found ? stair_body(*c.found) : json(nullptr);
    charts.push_back(std::move(cj));
  }
  j["charts"] = std::move(charts);
  return j;
}

json to_json(const CountReport& r) {
  json j = header("count_report", r.k);
  j["stairs"] = r.stairs;
  j["chambers"] = r.chambers;
  j["simple_chambers"] = r.simple_chambers;
  json by = json::array();
  for (const auto& [gens, count] : r.by_generators) {
    json e;
    e["r"] = gens;
    e["count"] = count;
    by.push_back(std::move(e));
  }
  j["by_generators"] = std::move(by);
  return j;
}

// ---- parse ----------------------------------------------------------------

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::schema_error, what); }

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

long long get_int(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) schema(std::string("field '") + name + "' must be an integer");
  return v.get<long long>();
}

int get_small_int(const json& j, const char* name) {
  const long long v = get_int(j, name);
  if (v < -(1LL << 30) || v > (1LL << 30)) schema(std::string("field '") + name + "' out of range");
  return static_cast<int>(v);
}

std::string get_string(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) schema(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_boolean()) schema(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

const json& get_array(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) schema(std::string("field '") + name + "' must be an array");
  return v;
}

Monomial get_monomial(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    schema("monomials are [a, b] integer pairs");
  const long long a = v[0].get<long long>(), b = v[1].get<long long>();
  if (a < 0 || b < 0 || a > (1LL << 30) || b > (1LL << 30)) schema("monomial exponent out of range");
  return Monomial{static_cast<int>(a), static_cast<int>(b)};
}

std::vector<int> get_int_list(const json& j, const char* name) {
  std::vector<int> out;
  for (const json& v : get_array(j, name)) {
    if (!v.is_number_integer()) schema(std::string("field '") + name + "' must hold integers");
    const long long x = v.get<long long>();
    if (x < -(1LL << 30) || x > (1LL << 30)) schema(std::string("field '") + name + "' out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

GroupOrder get_order(const json& j) { return GroupOrder(get_small_int(j, "k")); }

Irrep get_irrep(const json& j, GroupOrder k) {
  const int r = get_small_int(j, "first_rep");
  if (r < 0 || r >= k.value()) schema("first_rep must lie in 0..k-1");
  return Irrep{r};
}

Stair any_stair_from(const json& j, GroupOrder k) {
  return Stair(k, get_irrep(j, k), parse_steps(get_string(j, "steps")));
}

Stair g_stair_from(const json& j, GroupOrder k) {
  return make_stair(k, get_irrep(j, k), parse_steps(get_string(j, "steps")));
}

StabilityCondition theta_from(const json& j, GroupOrder k) {
  std::vector<Rational> values;
  for (const json& v : get_array(j, "values")) {
    if (!v.is_string()) schema("theta values must be strings such as \"-4\" or \"2/3\"");
    values.push_back(parse_rational(v.get<std::string>()));
  }
  return StabilityCondition(k, std::move(values));
}

Chamber chamber_from(const json& j, GroupOrder k) {
  Chamber c = build_chamber(k, get_irrep(j, k), get_int_list(j, "offsets"));
  if (j.contains("stairs") || j.contains("chamber_stair") || j.contains("theta")) {
    const json expect = to_json(c, true);
    for (const char* name : {"stairs", "chamber_stair", "theta"})
      if (j.contains(name) && j[name] != expect[name])
        schema(std::string("derived block '") + name + "' does not match the offsets");
  }
  return c;
}

FiberReport fiber_from(const json& j, GroupOrder k) {
  FiberReport r{k, get_irrep(j, k), get_int_list(j, "offsets"), {}, get_bool(j, "pass")};
  for (const json& cj : get_array(j, "charts")) {
    if (!cj.is_object()) schema("charts must be objects");
    std::vector<Monomial> surv;
    for (const json& m : get_array(cj, "survivors")) surv.push_back(get_monomial(m));
    const json& found = field(cj, "found");
    std::optional<Stair> f;
    if (!found.is_null()) {
      if (!found.is_object()) schema("'found' must be a stair or null");
      f = any_stair_from(found, k);
    }
    const json& expected = field(cj, "expected");
    if (!expected.is_object()) schema("'expected' must be a stair");
    r.charts.push_back(ChartCheck{get_small_int(cj, "j"), get_bool(cj, "pass"), std::move(surv),
                                  any_stair_from(expected, k), std::move(f)});
  }
  return r;
}

CountReport counts_from(const json& j, GroupOrder k) {
  CountReport r{k, get_int(j, "stairs"), get_int(j, "chambers"), get_int(j, "simple_chambers"), {}};
  for (const json& e : get_array(j, "by_generators")) {
    if (!e.is_object()) schema("by_generators entries must be objects");
    r.by_generators[get_small_int(e, "r")] = get_int(e, "count");
  }
  return r;
}

std::string infer_kind(const json& j) {
  if (j.contains("charts")) return "fiber_report";
  if (j.contains("by_generators")) return "count_report";
  if (j.contains("values")) return "theta";
  if (j.contains("offsets")) return "chamber";
  if (j.contains("anchor")) return "realized_stair";
  if (j.contains("steps")) return "stair";
  schema("cannot infer the document kind");
}

}  // namespace

std::string emit_json(const Document& doc, bool derived) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Chamber>)
          return to_json(v, derived).dump();
        else
          return to_json(v).dump();
      },
      doc);
}

Document parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) schema("a document must be a JSON object");
  if (j.contains("schema_version") &&
      (!j["schema_version"].is_number_integer() || j["schema_version"].get<long long>() != kSchemaVersion))
    schema("unsupported schema_version");

  const std::string kind = j.contains("kind") ? get_string(j, "kind") : infer_kind(j);
  const GroupOrder k = get_order(j);
  if (kind == "stair") return g_stair_from(j, k);
  if (kind == "realized_stair") {
    return realize(g_stair_from(j, k), get_monomial(field(j, "anchor")));
  }
  if (kind == "theta") return theta_from(j, k);
  if (kind == "chamber") return chamber_from(j, k);
  if (kind == "fiber_report") return fiber_from(j, k);
  if (kind == "count_report") return counts_from(j, k);
  schema("unknown document kind '" + kind + "'");
}

template <class T>
T parse_json_as(std::string_view text) {
  Document doc = parse_json(text);
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  schema(std::string("expected a different document kind, got '") + document_kind(doc) + "'");
}

template Stair parse_json_as<Stair>(std::string_view);
template RealizedStair parse_json_as<RealizedStair>(std::string_view);
template StabilityCondition parse_json_as<StabilityCondition>(std::string_view);
template Chamber parse_json_as<Chamber>(std::string_view);
template FiberReport parse_json_as<FiberReport>(std::string_view);
template CountReport parse_json_as<CountReport>(std::string_view);

}  // namespace gcon
