#include "gcon/chambers.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "gcon/error.hpp"

namespace gcon {

std::string describe(const Chamber& chamber) {
  std::string s = "chamber(k=" + std::to_string(chamber.order().value()) +
                  ", first_rep=" + std::to_string(chamber.first_rep().index) + ", offsets=[";
  for (std::size_t i = 0; i < chamber.offsets().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chamber.offsets()[i]);
  }
  return s + "])";
}

Chamber build_chamber(GroupOrder k, Irrep first_rep, std::vector<int> offsets) {
  const int n = k.value();
  if (first_rep.index < 0 || first_rep.index >= n)
    throw Error(ErrorCode::irrep_mismatch,
                "irrep index " + std::to_string(first_rep.index) + " outside 0..k-1");
  if (static_cast<int>(offsets.size()) != n - 1)
    throw Error(ErrorCode::offset_out_of_range,
                "a chamber needs k-1 = " + std::to_string(n - 1) + " offsets, got " +
                    std::to_string(offsets.size()));

  std::vector<Stair> stairs{Stair(k, first_rep, StepWord(n - 1, Step::down))};
  std::vector<int> starts{0};
  StepWord word = stairs.front().steps();

  for (std::size_t j = 0; j < offsets.size(); ++j) {
    const int o = offsets[j];
    if (o < 1 || o > n)
      throw Error(ErrorCode::offset_out_of_range,
                  "offset " + std::to_string(o) + " outside 1..k");
    const Stair& prev = stairs.back();
    const LinkingStair link = linking_stair(prev, LinkDirection::decreasing);
    if (link.word.steps()[o - 1] != Step::down)
      throw Error(ErrorCode::invalid_cut,
                  "offset " + std::to_string(o) + " after " + describe(prev) +
                      " selects a window with a vertical left cut");
    word.push_back(Step::right);
    word.insert(word.end(), prev.steps().begin(), prev.steps().begin() + (o - 1));
    starts.push_back(starts.back() + o);
    stairs.push_back(link.word.substair(o, n));
  }

  std::vector<ConeInequality> ineq;
  for (std::size_t j = 0; j < stairs.size(); ++j) {
    if (stairs[j].width() != static_cast<int>(j) + 1)
      throw Error(ErrorCode::internal, "chamber stair S_" + std::to_string(j + 1) +
                                           " has width " + std::to_string(stairs[j].width()));
    auto c = cone_inequalities(stairs[j]);
    ineq.insert(ineq.end(), c.begin(), c.end());
  }
  std::sort(ineq.begin(), ineq.end());
  ineq.erase(std::unique(ineq.begin(), ineq.end()), ineq.end());

  StabilityCondition theta = favorite_condition(stairs.front());
  for (std::size_t j = 1; j < stairs.size(); ++j) theta = theta + favorite_condition(stairs[j]);

  Stair chamber_stair(k, first_rep, std::move(word));
  return Chamber(k, std::move(offsets), std::move(stairs), std::move(starts),
                 std::move(chamber_stair), std::move(ineq), std::move(theta));
}

std::vector<int> admissible_offsets(const Stair& stair) {
  std::vector<int> out;
  const auto& s = stair.steps();
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s[p] == Step::down) out.push_back(static_cast<int>(p) + 1);
  return out;
}

namespace {

void descend(GroupOrder k, Irrep first_rep, const Stair& current, std::vector<int>& offsets,
             std::vector<Chamber>& out) {
  if (current.width() == k.value()) {
    out.push_back(build_chamber(k, first_rep, offsets));
    return;
  }
  const LinkingStair link = linking_stair(current, LinkDirection::decreasing);
  for (int o : admissible_offsets(current)) {
    offsets.push_back(o);
    descend(k, first_rep, link.word.substair(o, k.value()), offsets, out);
    offsets.pop_back();
  }
}

struct Branch {
  Irrep first_rep;
  int offset;
};

}  // namespace

std::vector<Chamber> enumerate_chambers(GroupOrder k, Exec exec) {
  const int n = k.value();
  std::vector<Branch> branches;
  for (int r = 0; r < n; ++r)
    for (int o = 1; o < n; ++o) branches.push_back({Irrep{r}, o});

  std::vector<std::vector<Chamber>> parts(branches.size());
  auto run = [&](std::size_t b) {
    const Stair column(k, branches[b].first_rep, StepWord(n - 1, Step::down));
    const LinkingStair link = linking_stair(column, LinkDirection::decreasing);
    std::vector<int> offsets{branches[b].offset};
    descend(k, branches[b].first_rep, link.word.substair(branches[b].offset, n), offsets,
            parts[b]);
  };
  const std::int64_t nb = static_cast<std::int64_t>(branches.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nb; ++b) run(b);
  } else {
    for (std::int64_t b = 0; b < nb; ++b) run(b);
  }

  std::vector<Chamber> out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

StabilityCondition representative_theta(const Chamber& chamber) { return chamber.representative(); }

bool contains(const Chamber& chamber, const StabilityCondition& theta) {
  if (chamber.order() != theta.order())
    throw Error(ErrorCode::dimension_mismatch, "stability condition has the wrong k");
  return std::all_of(chamber.inequalities().begin(), chamber.inequalities().end(),
                     [&](const ConeInequality& ineq) { return ineq.holds(theta); });
}

Chamber chamber_of_theta(GroupOrder k, const StabilityCondition& theta, Exec exec) {
  if (k != theta.order())
    throw Error(ErrorCode::dimension_mismatch, "stability condition has the wrong k");
  const Genericity g = genericity(theta, exec);
  if (!g.generic)
    throw Error(ErrorCode::not_generic,
                "theta " + describe(theta) + " is not generic: " + g.witness());

  std::vector<int> offsets;
  for (std::size_t j = 0; j + 1 < g.stable.size(); ++j) {
    const LinkingStair link = linking_stair(g.stable[j], LinkDirection::decreasing);
    std::optional<int> found;
    for (int o : admissible_offsets(g.stable[j]))
      if (link.word.substair(o, k.value()) == g.stable[j + 1]) found = o;
    if (!found)
      throw Error(ErrorCode::internal, "stable stairs " + describe(g.stable[j]) + " and " +
                                           describe(g.stable[j + 1]) + " are not linked");
    offsets.push_back(*found);
  }
  return build_chamber(k, g.stable.front().first_rep(), std::move(offsets));
}

Chamber simple_chamber_of(const Stair& stair) {
  if (!stair.is_g_stair()) throw Error(ErrorCode::dimension_mismatch, "expected a G-stair");
  const GroupOrder k = stair.order();
  const int n = k.value();

  // Downwards: the window of the increasing linking stair with the last
  // vertical right cut, i.e. the largest offset whose exit step is RIGHT.
  std::vector<int> lower;
  Stair cur = stair;
  while (cur.width() > 1) {
    const auto& s = cur.steps();
    int o = 0;
    for (int p = 0; p < n - 1; ++p)
      if (s[p] == Step::right) o = p + 1;
    const LinkingStair link = linking_stair(cur, LinkDirection::increasing);
    Stair prev = link.word.substair(o, n);
    lower.push_back(n - o);
    cur = std::move(prev);
  }
  const Irrep first_rep = cur.first_rep();
  std::vector<int> offsets(lower.rbegin(), lower.rend());

  // Upwards: the first horizontal left cut of the decreasing linking stair.
  cur = stair;
  while (cur.width() < n) {
    const int o = admissible_offsets(cur).front();
    offsets.push_back(o);
    cur = linking_stair(cur, LinkDirection::decreasing).word.substair(o, n);
  }

  Chamber c = build_chamber(k, first_rep, std::move(offsets));
  if (c.stairs()[stair.width() - 1] != stair)
    throw Error(ErrorCode::internal, "simple chamber of " + describe(stair) + " lost the stair");
  return c;
}

std::vector<Stair> characteristic_stairs(const Chamber& chamber) {
  const std::vector<int> target = marker_boxes(chamber.chamber_stair()).generators;
  std::vector<Stair> out;
  for (std::size_t j = 0; j < chamber.stairs().size(); ++j) {
    std::vector<int> gens = marker_boxes(chamber.stairs()[j]).generators;
    for (int& g : gens) g += chamber.starts()[j];
    if (gens == target) out.push_back(chamber.stairs()[j]);
  }
  return out;
}

bool is_simple(const Chamber& chamber) { return !characteristic_stairs(chamber).empty(); }

std::vector<Chamber> simple_chambers_by_filter(GroupOrder k, Exec exec) {
  std::vector<Chamber> all = enumerate_chambers(k, exec);
  std::vector<char> keep(all.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(all.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) keep[i] = is_simple(all[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) keep[i] = is_simple(all[i]);
  }
  std::vector<Chamber> out;
  for (std::int64_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(std::move(all[i]));
  return out;
}

std::vector<Chamber> simple_chambers_by_construction(GroupOrder k, Exec exec) {
  const std::vector<Stair> stairs = enumerate_stairs(k, exec);
  std::vector<std::optional<Chamber>> built(stairs.size());
  const std::int64_t n = static_cast<std::int64_t>(stairs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) built[i] = simple_chamber_of(stairs[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) built[i] = simple_chamber_of(stairs[i]);
  }

  std::vector<Chamber> out;
  std::set<ChamberKey> seen;
  for (auto& c : built)
    if (seen.insert(c->key()).second) out.push_back(std::move(*c));
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
    if (a.first_rep() != b.first_rep()) return a.first_rep() < b.first_rep();
    return a.offsets() < b.offsets();
  });
  return out;
}

std::vector<Chamber> enumerate_simple_chambers(GroupOrder k, Exec exec) {
  std::vector<Chamber> filtered = simple_chambers_by_filter(k, exec);
  const std::vector<Chamber> built = simple_chambers_by_construction(k, exec);
  if (filtered != built)
    throw Error(ErrorCode::internal,
                "simple chambers by filter (" + std::to_string(filtered.size()) +
                    ") and by construction (" + std::to_string(built.size()) + ") disagree");
  return filtered;
}

Compatibility compatibility(const Stair& a, const Stair& b, LinkDirection direction) {
  if (!a.is_g_stair() || !b.is_g_stair() || a.order() != b.order())
    throw Error(ErrorCode::dimension_mismatch, "compatibility needs two G-stairs of equal k");
  const int n = a.order().value();
  const bool decreasing = direction == LinkDirection::decreasing;
  const std::vector<Window> ws = windows(linking_stair(a, direction));
  const int lo = decreasing ? 1 : 0;
  const int hi = decreasing ? n : n - 1;
  for (int o = lo; o <= hi; ++o) {
    const Window& w = ws[o];
    if (w.stair != b) continue;
    Compatibility c;
    c.offset = o;
    if (decreasing) {
      c.by_height = b.height() == a.height() - 1;
      c.by_cut = w.entry_cut == Cut::horizontal;
    } else {
      c.by_height = b.height() == a.height() + 1;
      c.by_cut = w.exit_cut == Cut::vertical;
    }
    return c;
  }
  throw Error(ErrorCode::not_a_window, describe(b) + " is not a window of the " +
                                           to_string(direction) + " linking stair of " +
                                           describe(a));
}

bool compatible_pair(const Stair& a, const Stair& b, LinkDirection direction) {
  const Compatibility c = compatibility(a, b, direction);
  if (c.by_height != c.by_cut)
    throw Error(ErrorCode::internal, "height and cut criteria disagree for " + describe(a) +
                                         " -> " + describe(b));
  return c.by_cut;
}

std::map<int, long long> count_by_generators(GroupOrder k, Exec exec) {
  const std::vector<Stair> stairs = enumerate_stairs(k, exec);
  std::vector<std::optional<GeneratorKey>> keys(stairs.size());
  std::vector<int> rs(stairs.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(stairs.size());
  auto one = [&](std::int64_t i) {
    keys[i] = generator_key(stairs[i]);
    rs[i] = static_cast<int>(marker_boxes(stairs[i]).generators.size());
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) one(i);
  }
  std::map<GeneratorKey, int> classes;
  for (std::int64_t i = 0; i < n; ++i) classes.emplace(*keys[i], rs[i]);
  std::map<int, long long> counts;
  for (const auto& [key, r] : classes) ++counts[r];
  return counts;
}

namespace {

long long binomial(long long n, long long m) {
  if (m < 0 || n < m) return 0;
  long long r = 1;
  for (long long i = 1; i <= m; ++i) r = r * (n - m + i) / i;
  return r;
}

}  // namespace

std::map<int, long long> count_by_generators_formula(GroupOrder k) {
  const int n = k.value();
  std::map<int, long long> counts;
  counts[1] = n;
  for (int r = 2; r <= (n + 1) / 2; ++r) {
    long long sum = 0;
    for (int j = 0; j <= n - 2 * r + 1; ++j) sum += binomial(n - 2 - j, 2 * r - 3);
    counts[r] = n * sum;
  }
  return counts;
}

StabilityCondition hilbert_theta(GroupOrder k) {
  std::vector<Rational> v(k.value(), Rational(2));
  v[0] = Rational(-2 * k.value() + 2);
  return StabilityCondition(k, std::move(v));
}

StabilityCondition opposite_hilbert_theta(GroupOrder k) {
  return scale(hilbert_theta(k), Rational(-1));
}

}  // namespace gcon
