#include "gcon/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcon/error.hpp"
#include "gcon/oracle.hpp"
#include "gcon/render.hpp"
#include "gcon/tautological.hpp"

namespace gcon {

// ---- random instances -------------------------------------------------------

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Stair random_stair(GroupOrder k, Rng& rng) {
  StepWord steps;
  for (int i = 0; i + 1 < k.value(); ++i) steps.push_back(uniform(rng, 0, 1) ? Step::right : Step::down);
  return make_stair(k, Irrep{uniform(rng, 0, k.value() - 1)}, std::move(steps));
}

StabilityCondition random_theta(GroupOrder k, Rng& rng) {
  const int n = k.value();
  std::vector<Rational> v(n);
  const bool coarse = uniform(rng, 0, 1) == 0;
  Rational sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    v[i] = coarse ? Rational(uniform(rng, -2, 2)) : Rational(uniform(rng, -12, 12), uniform(rng, 1, 6));
    v[i].canonicalize();
    sum += v[i];
  }
  v[n - 1] = -sum;
  return StabilityCondition(k, std::move(v));
}

Chamber random_chamber(GroupOrder k, Rng& rng) {
  const Irrep first{uniform(rng, 0, k.value() - 1)};
  std::vector<int> offsets;
  Stair current = make_stair(k, first, StepWord(k.value() - 1, Step::down));
  for (int j = 1; j < k.value(); ++j) {
    const std::vector<int> choices = admissible_offsets(current);
    const int o = choices[uniform(rng, 0, static_cast<int>(choices.size()) - 1)];
    offsets.push_back(o);
    current = windows(linking_stair(current, LinkDirection::decreasing))[o].stair;
  }
  return build_chamber(k, first, std::move(offsets));
}

Document random_document(Rng& rng, int k_min, int k_max) {
  const GroupOrder k(uniform(rng, k_min, k_max));
  const GroupOrder small(std::min(k.value(), 6));
  switch (uniform(rng, 0, 5)) {
    case 0: return random_stair(k, rng);
    case 1: {
      const Stair s = random_stair(k, rng);
      const Monomial base = realize(s).anchor();
      const int diag = uniform(rng, 0, 4), turns = uniform(rng, 0, 2);
      return realize(s, Monomial{base.a + diag + turns * k.value(), base.b + diag});
    }
    case 2: return random_theta(k, rng);
    case 3: return random_chamber(k, rng);
    case 4: return verify_tautological(random_chamber(small, rng));
    default: {
      CountReport r{small, uniform(rng, 0, 1000), uniform(rng, 0, 1000), uniform(rng, 0, 1000), {}};
      for (int g = 1; g <= (small.value() + 1) / 2; ++g) r.by_generators[g] = uniform(rng, 0, 500);
      return r;
    }
  }
}

// ---- criteria ---------------------------------------------------------------

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIP";
  }
  return "SKIP";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "chamber count is k! with distinct chamber stairs", 2, 7},
      {2, "simple chamber count is k*2^(k-2), filter and construction agree", 2, 7},
      {3, "stair count is k*2^(k-1), generator classes match the closed form", 2, 10},
      {4, "classify agrees with the brute-force submodule oracle", 2, 6},
      {5, "every stair is stable under its non-generic favorite condition", 2, 7},
      {6, "representative theta of every chamber is generic and separating", 2, 6},
      {7, "(-2k+2, 2, ..., 2) lies in the chamber of hooks generated by rho_0", 2, 6},
      {8, "height, cut and chamber criteria for linking windows agree", 2, 5},
      {9, "tautological fibers at chart origins are the chamber stairs", 2, 7},
      {10, "fibers at charts 1 and k are the closed-form quotients", 2, 5},
      {11, "JSON round trip and deterministic rendering", 2, GroupOrder::kMax},
  };
  return list;
}

const Criterion& criterion(int id) {
  for (const Criterion& c : criteria())
    if (c.id == id) return c;
  throw Error(ErrorCode::internal, "no criterion " + std::to_string(id));
}

namespace {

struct Check {
  CriterionResult result;
  explicit Check(int id) { result.id = id; result.verdict = Verdict::pass; }

  bool require(bool ok, const std::string& what) {
    if (!ok && result.verdict == Verdict::pass) {
      result.verdict = Verdict::fail;
      result.detail = what;
    }
    return ok;
  }
  CriterionResult done(std::string detail_on_pass) {
    if (result.verdict == Verdict::pass) result.detail = std::move(detail_on_pass);
    return std::move(result);
  }
};

template <class F>
void for_each_index(std::int64_t n, Exec exec, F&& f) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) f(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) f(i);
  }
}

// First failing index of a predicate over 0..n-1, or -1.
template <class F>
std::int64_t first_failure(std::int64_t n, Exec exec, F&& ok) {
  std::vector<char> bad(n, 0);
  for_each_index(n, exec, [&](std::int64_t i) { bad[i] = ok(i) ? 0 : 1; });
  auto it = std::find(bad.begin(), bad.end(), 1);
  return it == bad.end() ? -1 : it - bad.begin();
}

CriterionResult chamber_count(GroupOrder k, const VerifyOptions& opt) {
  Check c(1);
  const std::vector<Chamber> chambers = enumerate_chambers(k, opt.exec);
  std::set<ChamberKey> keys;
  for (const Chamber& ch : chambers) keys.insert(ch.key());
  c.result.count = static_cast<long long>(chambers.size());
  c.require(static_cast<long long>(chambers.size()) == factorial(k.value()),
            std::to_string(chambers.size()) + " chambers, expected " + std::to_string(factorial(k.value())));
  c.require(keys.size() == chambers.size(), "chamber stairs are not pairwise distinct");
  for (const Chamber& ch : chambers)
    for (int j = 0; j < k.value(); ++j)
      c.require(ch.stairs()[j].width() == j + 1, describe(ch) + " breaks the width ladder");
  return c.done(std::to_string(chambers.size()) + " chambers, " + std::to_string(keys.size()) +
                " distinct chamber stairs");
}

CriterionResult simple_count(GroupOrder k, const VerifyOptions& opt) {
  Check c(2);
  const std::vector<Chamber> by_filter = simple_chambers_by_filter(k, opt.exec);
  const std::vector<Chamber> by_construction = simple_chambers_by_construction(k, opt.exec);
  const long long expected = k.value() * (1LL << (k.value() - 2));
  c.result.count = static_cast<long long>(by_filter.size());
  c.require(static_cast<long long>(by_filter.size()) == expected,
            std::to_string(by_filter.size()) + " simple chambers, expected " + std::to_string(expected));
  c.require(by_filter == by_construction, "filter and construction routes differ");
  return c.done(std::to_string(by_filter.size()) + " simple chambers by both routes");
}

CriterionResult stair_count(GroupOrder k, const VerifyOptions& opt) {
  Check c(3);
  const int n = k.value();
  const std::vector<Stair> stairs = enumerate_stairs(k, opt.exec);
  const long long expected = n * (1LL << (n - 1));
  c.result.count = static_cast<long long>(stairs.size());
  c.require(static_cast<long long>(stairs.size()) == expected,
            std::to_string(stairs.size()) + " stairs, expected " + std::to_string(expected));
  c.require(std::set<Stair>(stairs.begin(), stairs.end()).size() == stairs.size(), "repeated stairs");
  for (const Stair& s : stairs)
    c.require(s.is_g_stair() && oracle::satisfies_stair_condition(s), describe(s) + " is not a G-stair");
  const auto counts = count_by_generators(k, opt.exec);
  const auto formula = count_by_generators_formula(k);
  long long total = 0;
  for (const auto& [r, m] : counts) total += m;
  c.require(counts == formula, "generator classes differ from the closed form");
  c.require(total == n * (1LL << (n - 2)), "generator classes total " + std::to_string(total));
  c.require(!counts.empty() && counts.rbegin()->first == (n + 1) / 2,
            "largest generator count is not floor((k+1)/2)");
  return c.done(std::to_string(stairs.size()) + " stairs, " + std::to_string(total) +
                " generator classes");
}

CriterionResult oracle_agreement(GroupOrder k, const VerifyOptions& opt) {
  Check c(4);
  Rng rng(opt.seed ^ (0x4000ULL + k.value()));
  const std::vector<Stair> stairs = enumerate_stairs(k, opt.exec);
  const int samples = 50;
  long long tally[3] = {0, 0, 0};
  for (int t = 0; t < samples; ++t) {
    const StabilityCondition theta = random_theta(k, rng);
    const std::vector<Stability> fast = classify_all(stairs, theta, opt.exec);
    for (std::size_t i = 0; i < stairs.size(); ++i) {
      const Stability slow = oracle::classify(stairs[i], theta);
      ++tally[static_cast<int>(slow)];
      c.require(fast[i] == slow, describe(stairs[i]) + " under " + describe(theta) + ": " +
                                     to_string(fast[i]) + " vs oracle " + to_string(slow));
    }
  }
  std::ostringstream d;
  d << stairs.size() * samples << " comparisons (stable " << tally[0] << ", semistable " << tally[1]
    << ", unstable " << tally[2] << ")";
  return c.done(d.str());
}

CriterionResult favorite_suite(GroupOrder k, const VerifyOptions& opt) {
  Check c(5);
  const std::vector<Stair> stairs = enumerate_stairs(k, opt.exec);
  const std::int64_t n = static_cast<std::int64_t>(stairs.size());
  std::vector<char> stable(n), generic(n), generic_by_walls(n);
  for_each_index(n, opt.exec, [&](std::int64_t i) {
    const StabilityCondition fav = favorite_condition(stairs[i]);
    stable[i] = classify(stairs[i], fav) == Stability::stable;
    generic[i] = is_generic(k, fav, Exec::serial);
    generic_by_walls[i] = oracle::is_generic(fav);
  });
  long long unstable = 0, gen = 0;
  std::string first_generic;
  for (std::int64_t i = 0; i < n; ++i) {
    c.require(stable[i], describe(stairs[i]) + " is not stable under its favorite condition");
    c.require(generic[i] == generic_by_walls[i],
              describe(stairs[i]) + ": toric and wall genericity tests disagree");
    unstable += !stable[i];
    if (generic[i] && gen++ == 0)
      first_generic = describe(stairs[i]) + " has generic favorite " +
                      describe(favorite_condition(stairs[i]));
  }
  c.require(gen == 0, std::to_string(gen) + " of " + std::to_string(n) +
                          " favorite conditions are generic (no wall through them), e.g. " +
                          first_generic);
  return c.done(std::to_string(n) + " favorite conditions, all stable and on a wall");
}

CriterionResult representatives(GroupOrder k, const VerifyOptions& opt) {
  Check c(6);
  const std::vector<Chamber> chambers = enumerate_chambers(k, opt.exec);
  const std::int64_t n = static_cast<std::int64_t>(chambers.size());
  std::vector<std::string> why(n);
  for_each_index(n, opt.exec, [&](std::int64_t i) {
    const Chamber& ch = chambers[i];
    const StabilityCondition& theta = representative_theta(ch);
    for (const Stair& s : ch.stairs())
      if (classify(s, theta) != Stability::stable) {
        why[i] = describe(s) + " not stable in " + describe(ch);
        return;
      }
    if (!is_generic(k, theta, Exec::serial)) why[i] = describe(ch) + ": representative not generic";
    else if (!contains(ch, theta)) why[i] = describe(ch) + ": representative outside";
    else if (!(chamber_of_theta(k, theta, Exec::serial) == ch)) why[i] = describe(ch) + ": chamber_of_theta differs";
    else
      for (std::int64_t other = 0; other < n; ++other)
        if (other != i && contains(chambers[other], theta)) {
          why[i] = describe(chambers[other]) + " contains the representative of " + describe(ch);
          return;
        }
  });
  for (const std::string& w : why) c.require(w.empty(), w);
  return c.done(std::to_string(n) + " chambers, " + std::to_string(n * (n - 1)) + " cross rejections");
}

CriterionResult hilbert_fixture(GroupOrder k, const VerifyOptions& opt) {
  Check c(7);
  const StabilityCondition theta = hilbert_theta(k);
  const Chamber ch = chamber_of_theta(k, theta, opt.exec);
  const Chamber expected = build_chamber(k, make_irrep(k, 1), std::vector<int>(k.value() - 1, 1));
  c.require(ch == expected, "chamber of " + describe(theta) + " is " + describe(ch));
  for (const Stair& s : ch.stairs()) {
    const auto gens = marker_boxes(s).generators;
    c.require(gens.size() == 1 && s.irrep_at(gens.front()).index == 0,
              describe(s) + " is not a hook generated by rho_0");
  }
  c.require(contains(ch, theta), "theta outside its own chamber");
  return c.done(describe(ch));
}

CriterionResult linking_windows(GroupOrder k, const VerifyOptions& opt) {
  Check c(8);
  const int n = k.value();
  std::set<std::pair<Stair, Stair>> consecutive;
  for (const Chamber& ch : enumerate_chambers(k, opt.exec))
    for (int j = 0; j + 1 < n; ++j) consecutive.emplace(ch.stairs()[j], ch.stairs()[j + 1]);
  long long checked = 0, compatible = 0;
  for (const Stair& a : enumerate_stairs(k, opt.exec))
    for (LinkDirection dir : {LinkDirection::decreasing, LinkDirection::increasing}) {
      const bool decreasing = dir == LinkDirection::decreasing;
      const std::vector<Window> ws = windows(linking_stair(a, dir));
      for (int o = decreasing ? 1 : 0; o <= (decreasing ? n : n - 1); ++o) {
        const Stair& b = ws[o].stair;
        const Compatibility cmp = compatibility(a, b, dir);
        const bool truth = decreasing ? consecutive.count({a, b}) > 0 : consecutive.count({b, a}) > 0;
        const std::string where = describe(a) + " -> " + describe(b) + " (" + to_string(dir) +
                                  ", offset " + std::to_string(o) + ")";
        c.require(cmp.offset == o, where + ": found at offset " + std::to_string(cmp.offset));
        c.require(cmp.by_height == cmp.by_cut, where + ": height and cut criteria disagree");
        c.require(cmp.by_cut == truth, where + ": cut criterion disagrees with the chambers");
        ++checked;
        compatible += truth;
      }
    }
  return c.done(std::to_string(checked) + " windows, " + std::to_string(compatible) + " compatible");
}

CriterionResult tautological(GroupOrder k, const VerifyOptions& opt) {
  Check c(9);
  std::vector<Chamber> chambers;
  if (k.value() <= 5) {
    chambers = enumerate_chambers(k, opt.exec);
  } else {
    Rng rng(opt.seed ^ (0x9000ULL + k.value()));
    for (int i = 0; i < 100; ++i) chambers.push_back(random_chamber(k, rng));
  }
  const std::vector<FiberReport> reports = verify_tautological_all(chambers, opt.exec);
  for (const FiberReport& r : reports) {
    if (r.pass) continue;
    for (const ChartCheck& chart : r.charts)
      c.require(chart.pass, "chart " + std::to_string(chart.j) + " of " +
                                describe(build_chamber(r.k, r.first_rep, r.offsets)) + " has " +
                                std::to_string(chart.survivors.size()) + " survivors");
  }
  return c.done(std::to_string(reports.size()) + (k.value() <= 5 ? " chambers" : " sampled chambers") +
                ", " + std::to_string(reports.size() * k.value()) + " charts");
}

CriterionResult closed_forms(GroupOrder k, const VerifyOptions& opt) {
  Check c(10);
  const std::vector<Chamber> chambers = enumerate_chambers(k, opt.exec);
  auto sorted = [](std::vector<Monomial> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (const Chamber& ch : chambers) {
    const ChamberIdeal ideal = ideal_generators(ch);
    c.require(sorted(fiber_survivors(ideal, 1)) == sorted(first_chart_basis(ideal)),
              describe(ch) + ": chart 1 differs from the closed form");
    c.require(sorted(fiber_survivors(ideal, k.value())) == sorted(last_chart_basis(ideal)),
              describe(ch) + ": chart k differs from the closed form");
  }
  return c.done(std::to_string(chambers.size()) + " chambers");
}

}  // namespace

CriterionResult check_round_trip(Rng& rng, int count, int k_min, int k_max) {
  Check c(11);
  std::map<std::string, int> kinds;
  for (int i = 0; i < count; ++i) {
    const Document doc = random_document(rng, k_min, k_max);
    ++kinds[document_kind(doc)];
    for (bool derived : {false, true}) {
      const std::string text = emit_json(doc, derived);
      try {
        const Document back = parse_json(text);
        if (!c.require(back == doc, "round trip changed " + text)) break;
        c.require(emit_json(back, derived) == text, "re-emission differs for " + text);
      } catch (const Error& e) {
        c.require(false, text + ": " + e.what());
      }
    }
    if (auto rs = figure_of(doc)) {
      c.require(render_ascii(*rs) == render_ascii(*rs) && render_svg(*rs) == render_svg(*rs),
                "rendering is not deterministic");
      c.require(render_ascii(*rs) == render_ascii(*figure_of(parse_json(emit_json(doc)))),
                "rendering differs after a round trip");
    }
  }
  std::string d = std::to_string(count) + " documents (";
  for (auto it = kinds.begin(); it != kinds.end(); ++it)
    d += (it == kinds.begin() ? "" : ", ") + it->first + " " + std::to_string(it->second);
  return c.done(d + ")");
}

CriterionResult check_criterion(int id, GroupOrder k, const VerifyOptions& opt) {
  const Criterion& spec = criterion(id);
  if (k.value() < spec.k_min || k.value() > spec.k_max) {
    CriterionResult r;
    r.id = id;
    r.detail = "k=" + std::to_string(k.value()) + " outside " + std::to_string(spec.k_min) + ".." +
               std::to_string(spec.k_max);
    return r;
  }
  try {
    switch (id) {
      case 1: return chamber_count(k, opt);
      case 2: return simple_count(k, opt);
      case 3: return stair_count(k, opt);
      case 4: return oracle_agreement(k, opt);
      case 5: return favorite_suite(k, opt);
      case 6: return representatives(k, opt);
      case 7: return hilbert_fixture(k, opt);
      case 8: return linking_windows(k, opt);
      case 9: return tautological(k, opt);
      case 10: return closed_forms(k, opt);
      case 11: {
        Rng rng(opt.seed ^ (0xb000ULL + k.value()));
        return check_round_trip(rng, opt.documents, k.value(), k.value());
      }
    }
  } catch (const Error& e) {
    return CriterionResult{id, Verdict::fail, std::string(to_string(e.code())) + ": " + e.what(), {}};
  }
  throw Error(ErrorCode::internal, "no criterion " + std::to_string(id));
}

bool VerifyReport::pass() const {
  return std::none_of(results.begin(), results.end(),
                      [](const CriterionResult& r) { return r.verdict == Verdict::fail; });
}

std::string VerifyReport::summary() const {
  auto count_of = [&](int id) -> std::string {
    for (const CriterionResult& r : results)
      if (r.id == id && r.count) return std::to_string(*r.count);
    return "n/a";
  };
  std::string taut = "n/a";
  for (const CriterionResult& r : results)
    if (r.id == 9 && r.verdict != Verdict::skipped) taut = r.verdict == Verdict::pass ? "pass" : "fail";
  return "chambers=" + count_of(1) + " simple=" + count_of(2) + " stairs=" + count_of(3) + " taut=" + taut;
}

VerifyReport verify(GroupOrder k, const VerifyOptions& opt) {
  VerifyReport report{k, {}};
  for (const Criterion& c : criteria()) report.results.push_back(check_criterion(c.id, k, opt));
  return report;
}

}  // namespace gcon
