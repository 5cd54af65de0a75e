#include "gcon/stability.hpp"

#include <algorithm>
#include <array>

#include "gcon/error.hpp"

namespace gcon {

StabilityCondition::StabilityCondition(GroupOrder k, std::vector<Rational> values)
    : k_(k), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != k.value())
    throw Error(ErrorCode::dimension_mismatch,
                "stability condition has " + std::to_string(values_.size()) +
                    " entries, expected " + std::to_string(k.value()));
  Rational sum = 0;
  for (auto& v : values_) {
    v.canonicalize();
    sum += v;
  }
  if (sum != 0)
    throw Error(ErrorCode::theta_sum,
                "stability condition must sum to 0 (sum is " + format_rational(sum) + ")");
}

StabilityCondition make_theta(GroupOrder k, std::span<const long long> values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(mpz_class(std::to_string(x)));
  return StabilityCondition(k, std::move(v));
}

std::string describe(const StabilityCondition& theta) {
  std::string s = "(";
  for (std::size_t i = 0; i < theta.values().size(); ++i) {
    if (i) s += ", ";
    s += format_rational(theta.values()[i]);
  }
  return s + ")";
}

StabilityCondition operator+(const StabilityCondition& a, const StabilityCondition& b) {
  if (a.order() != b.order())
    throw Error(ErrorCode::dimension_mismatch, "adding stability conditions of different k");
  std::vector<Rational> v(a.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
  return StabilityCondition(a.order(), std::move(v));
}

StabilityCondition scale(const StabilityCondition& theta, const Rational& factor) {
  std::vector<Rational> v(theta.values());
  for (auto& x : v) x *= factor;
  return StabilityCondition(theta.order(), std::move(v));
}

Rational theta_of(const StabilityCondition& theta, const IrrepSet& reps) {
  if (theta.order() != reps.order())
    throw Error(ErrorCode::dimension_mismatch, "irrep set and stability condition differ in k");
  Rational sum = 0;
  for (Irrep r : reps.members()) sum += theta[r];
  return sum;
}

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::stable: return "STABLE";
    case Stability::strictly_semistable: return "STRICTLY_SEMISTABLE";
    case Stability::unstable: return "UNSTABLE";
  }
  return "UNSTABLE";
}

namespace {

void require_matching(const Stair& stair, const StabilityCondition& theta) {
  if (!stair.is_g_stair() || stair.order() != theta.order())
    throw Error(ErrorCode::dimension_mismatch,
                "stair " + describe(stair) + " does not match a stability condition with k=" +
                    std::to_string(theta.order().value()));
}

}  // namespace

// Dynamic programming along the stair. A state records whether the current
// box is in the set and whether some box so far is in / out; the closure rule
// only couples consecutive boxes, so this covers exactly the closed sets.
Rational min_submodule_value(const Stair& stair, const StabilityCondition& theta) {
  require_matching(stair, theta);
  constexpr int kIn = 1, kSomeIn = 2, kSomeOut = 4;
  std::array<std::optional<Rational>, 8> best;
  best[kSomeOut] = Rational(0);
  best[kIn | kSomeIn] = theta[stair.irrep_at(0)];

  const auto& s = stair.steps();
  for (int t = 0; t + 1 < stair.size(); ++t) {
    std::array<std::optional<Rational>, 8> next;
    const Rational& w = theta[stair.irrep_at(t + 1)];
    for (int state = 0; state < 8; ++state) {
      if (!best[state]) continue;
      const bool here = state & kIn;
      for (int take = 0; take < 2; ++take) {
        if (s[t] == Step::right && here && !take) continue;
        if (s[t] == Step::down && take && !here) continue;
        const int to = take ? ((state & ~kIn) | kIn | kSomeIn) : ((state & ~kIn) | kSomeOut);
        Rational v = *best[state];
        if (take) v += w;
        if (!next[to] || v < *next[to]) next[to] = std::move(v);
      }
    }
    best = std::move(next);
  }

  std::optional<Rational> result;
  for (int state : {kSomeIn | kSomeOut, kIn | kSomeIn | kSomeOut})
    if (best[state] && (!result || *best[state] < *result)) result = best[state];
  return *result;
}

Stability classify(const Stair& stair, const StabilityCondition& theta) {
  const Rational m = min_submodule_value(stair, theta);
  if (m > 0) return Stability::stable;
  if (m == 0) return Stability::strictly_semistable;
  return Stability::unstable;
}

StabilityCondition favorite_condition(const Stair& stair) {
  if (!stair.is_g_stair())
    throw Error(ErrorCode::dimension_mismatch, "favorite conditions need a G-stair");
  const int last = stair.size() - 1;
  std::vector<Rational> v(stair.order().value(), Rational(0));
  for (int t = 0; t <= last; ++t) {
    const bool end = t == 0 || t == last;
    if (is_generator(stair, t))
      v[stair.irrep_at(t).index] = end ? -1 : -2;
    else if (is_antigenerator(stair, t))
      v[stair.irrep_at(t).index] = end ? 1 : 2;
  }
  return StabilityCondition(stair.order(), std::move(v));
}

std::vector<ConeInequality> cone_inequalities(const Stair& stair) {
  std::vector<ConeInequality> out;
  for (BoxMask m : submodule_masks(stair, true)) out.push_back({rep_content(stair, m)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Stability> classify_all(std::span<const Stair> stairs, const StabilityCondition& theta,
                                    Exec exec) {
  const std::int64_t n = static_cast<std::int64_t>(stairs.size());
  std::vector<Stability> out(n, Stability::unstable);
  for (const Stair& s : stairs) require_matching(s, theta);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) out[i] = classify(stairs[i], theta);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = classify(stairs[i], theta);
  }
  return out;
}

std::string Genericity::witness() const {
  if (generic) return "generic";
  if (semistable_witness)
    return "strictly semistable stair " + describe(*semistable_witness);
  std::string s;
  if (!missing_widths.empty()) {
    s = "no stable stair of width";
    for (int w : missing_widths) s += " " + std::to_string(w);
  }
  if (!repeated_widths.empty()) {
    if (!s.empty()) s += "; ";
    s += "several stable stairs of width";
    for (int w : repeated_widths) s += " " + std::to_string(w);
  }
  return s;
}

Genericity genericity(const StabilityCondition& theta, Exec exec) {
  const GroupOrder k = theta.order();
  const std::vector<Stair> stairs = enumerate_stairs(k, exec);
  const std::vector<Stability> cls = classify_all(stairs, theta, exec);

  Genericity g;
  std::vector<int> per_width(k.value() + 1, 0);
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    if (cls[i] == Stability::strictly_semistable && !g.semistable_witness)
      g.semistable_witness = stairs[i];
    if (cls[i] == Stability::stable) {
      g.stable.push_back(stairs[i]);
      ++per_width[stairs[i].width()];
    }
  }
  std::stable_sort(g.stable.begin(), g.stable.end(),
                   [](const Stair& a, const Stair& b) { return a.width() < b.width(); });
  for (int w = 1; w <= k.value(); ++w) {
    if (per_width[w] == 0) g.missing_widths.push_back(w);
    if (per_width[w] > 1) g.repeated_widths.push_back(w);
  }
  g.generic = !g.semistable_witness && g.missing_widths.empty() && g.repeated_widths.empty();
  return g;
}

bool is_generic(GroupOrder k, const StabilityCondition& theta, Exec exec) {
  if (k != theta.order())
    throw Error(ErrorCode::dimension_mismatch, "stability condition has the wrong k");
  return genericity(theta, exec).generic;
}

}  // namespace gcon
