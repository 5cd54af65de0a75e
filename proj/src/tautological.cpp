#include "gcon/tautological.hpp"

#include <algorithm>

#include "gcon/error.hpp"

namespace gcon {

ChamberIdeal ideal_generators(const Chamber& chamber) {
  const RealizedStair rs = chamber.realized_chamber_stair();
  ChamberIdeal ideal{chamber.order(), {}};
  for (int g : marker_boxes(rs.stair()).generators) ideal.generators.push_back(rs.box(g));
  return ideal;
}

bool monomial_in_ideal(const ChamberIdeal& ideal, Monomial m) {
  if (m.a < 0 || m.b < 0) return false;
  return std::any_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const Monomial& g) { return g.a <= m.a && g.b <= m.b; });
}

const char* to_string(KillRule rule) noexcept {
  switch (rule) {
    case KillRule::killed_a: return "KILLED_A";
    case KillRule::killed_c: return "KILLED_C";
    case KillRule::killed_xy: return "KILLED_XY";
    case KillRule::survives: return "SURVIVES";
  }
  return "SURVIVES";
}

bool holds_a(const ChamberIdeal& ideal, int j, Monomial m) {
  const int k = ideal.k.value();
  return monomial_in_ideal(ideal, Monomial{m.a - j, m.b + k - j});
}

bool holds_c(const ChamberIdeal& ideal, int j, Monomial m) {
  const int k = ideal.k.value();
  return monomial_in_ideal(ideal, Monomial{m.a + j - 1, m.b - (k - j + 1)});
}

namespace {

void require_chart(const ChamberIdeal& ideal, int j) {
  if (j < 1 || j > ideal.k.value())
    throw Error(ErrorCode::bad_chart, "chart index " + std::to_string(j) + " outside 1..k");
}

KillRule kill_unchecked(const ChamberIdeal& ideal, int j, Monomial m) {
  if (holds_a(ideal, j, m)) return KillRule::killed_a;
  if (holds_c(ideal, j, m)) return KillRule::killed_c;
  if (monomial_in_ideal(ideal, Monomial{m.a - 1, m.b - 1})) return KillRule::killed_xy;
  return KillRule::survives;
}

}  // namespace

KillRule kill_test(const ChamberIdeal& ideal, int j, Monomial m) {
  require_chart(ideal, j);
  if (!monomial_in_ideal(ideal, m))
    throw Error(ErrorCode::not_in_ideal, "x^" + std::to_string(m.a) + "y^" +
                                             std::to_string(m.b) + " is not in the ideal");
  return kill_unchecked(ideal, j, m);
}

std::vector<Monomial> fiber_survivors(const ChamberIdeal& ideal, int j, std::optional<int> margin) {
  require_chart(ideal, j);
  const int pad = margin.value_or(2 * ideal.k.value());
  const int max_a = ideal.generators.back().a + pad;
  const int max_b = ideal.generators.front().b + pad;
  std::vector<Monomial> out;
  for (int a = 0; a <= max_a; ++a)
    for (int b = max_b; b >= 0; --b) {
      const Monomial m{a, b};
      if (monomial_in_ideal(ideal, m) && kill_unchecked(ideal, j, m) == KillRule::survives)
        out.push_back(m);
    }
  return out;
}

TautFiber fiber_at_chart(const Chamber& chamber, int j) {
  const ChamberIdeal ideal = ideal_generators(chamber);
  std::vector<Monomial> survivors = fiber_survivors(ideal, j);
  const int k = chamber.order().value();
  if (static_cast<int>(survivors.size()) != k)
    throw Error(ErrorCode::internal, "chart " + std::to_string(j) + " of " + describe(chamber) +
                                         " has " + std::to_string(survivors.size()) +
                                         " surviving monomials, expected " + std::to_string(k));
  const auto stair = abstract_stair_of(chamber.order(), survivors);
  if (!stair || stair->width() != j)
    throw Error(ErrorCode::internal, "chart " + std::to_string(j) + " of " + describe(chamber) +
                                         " does not give a stair of width " + std::to_string(j));
  RealizedStair rs = realize(*stair, survivors.front());
  return TautFiber{j, std::move(survivors), std::move(rs)};
}

FiberReport verify_tautological(const Chamber& chamber) {
  const ChamberIdeal ideal = ideal_generators(chamber);
  const int k = chamber.order().value();
  FiberReport report{chamber.order(), chamber.first_rep(), chamber.offsets(), {}, true};
  for (int j = 1; j <= k; ++j) {
    ChartCheck c{j, false, fiber_survivors(ideal, j), chamber.stairs()[j - 1], std::nullopt};
    if (static_cast<int>(c.survivors.size()) == k) c.found = abstract_stair_of(ideal.k, c.survivors);
    c.pass = c.found && c.found->width() == j && *c.found == c.expected;
    report.pass = report.pass && c.pass;
    report.charts.push_back(std::move(c));
  }
  return report;
}

std::vector<FiberReport> verify_tautological_all(const std::vector<Chamber>& chambers, Exec exec) {
  std::vector<std::optional<FiberReport>> tmp(chambers.size());
  const std::int64_t n = static_cast<std::int64_t>(chambers.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) tmp[i] = verify_tautological(chambers[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) tmp[i] = verify_tautological(chambers[i]);
  }
  std::vector<FiberReport> out;
  out.reserve(tmp.size());
  for (auto& r : tmp) out.push_back(std::move(*r));
  return out;
}

std::vector<Monomial> first_chart_basis(const ChamberIdeal& ideal) {
  const Monomial g = ideal.generators.front();
  std::vector<Monomial> out;
  for (int t = ideal.k.value() - 1; t >= 0; --t) out.push_back({g.a, g.b + t});
  return out;
}

std::vector<Monomial> last_chart_basis(const ChamberIdeal& ideal) {
  const Monomial g = ideal.generators.back();
  std::vector<Monomial> out;
  for (int t = 0; t < ideal.k.value(); ++t) out.push_back({g.a + t, g.b});
  return out;
}

}  // namespace gcon
