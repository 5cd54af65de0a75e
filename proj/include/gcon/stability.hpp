#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcon/constellations.hpp"
#include "gcon/exec.hpp"
#include "gcon/rational.hpp"
#include "gcon/stairs.hpp"

namespace gcon {

/// theta in Hom(R(G), Q) with theta(C[G]) = 0: one exact rational per irrep,
/// summing to zero.
class StabilityCondition {
 public:
  StabilityCondition(GroupOrder k, std::vector<Rational> values);

  GroupOrder order() const noexcept { return k_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](Irrep r) const { return values_[r.index]; }

  friend bool operator==(const StabilityCondition&, const StabilityCondition&) = default;

 private:
  GroupOrder k_;
  std::vector<Rational> values_;
};

StabilityCondition make_theta(GroupOrder k, std::span<const long long> values);
std::string describe(const StabilityCondition& theta);

StabilityCondition operator+(const StabilityCondition& a, const StabilityCondition& b);
StabilityCondition scale(const StabilityCondition& theta, const Rational& factor);

Rational theta_of(const StabilityCondition& theta, const IrrepSet& reps);

enum class Stability { stable, strictly_semistable, unstable };
const char* to_string(Stability s) noexcept;

/// Smallest theta-value over the proper nonzero submodules of the stair.
Rational min_submodule_value(const Stair& stair, const StabilityCondition& theta);

Stability classify(const Stair& stair, const StabilityCondition& theta);

/// -2 / -1 on interior / end generators, +2 / +1 on interior / end
/// antigenerators, 0 elsewhere.
StabilityCondition favorite_condition(const Stair& stair);

/// theta lies in the open cone when the sum over `subset` is positive.
struct ConeInequality {
  IrrepSet subset;

  bool holds(const StabilityCondition& theta) const { return theta_of(theta, subset) > 0; }

  friend bool operator==(const ConeInequality&, const ConeInequality&) = default;
  friend auto operator<=>(const ConeInequality&, const ConeInequality&) = default;
};

/// Irrep contents of all proper nonzero submodules, sorted and deduplicated.
std::vector<ConeInequality> cone_inequalities(const Stair& stair);

std::vector<Stability> classify_all(std::span<const Stair> stairs, const StabilityCondition& theta,
                                    Exec exec = Exec::parallel);

struct Genericity {
  bool generic = false;
  std::vector<Stair> stable;                // sorted by width
  std::optional<Stair> semistable_witness;  // first strictly semistable stair
  std::vector<int> missing_widths;
  std::vector<int> repeated_widths;

  std::string witness() const;
};

/// Genericity is decided over the torus-fixed constellations: no stair may be
/// strictly semistable and the stable ones must be exactly one per width.
Genericity genericity(const StabilityCondition& theta, Exec exec = Exec::parallel);
bool is_generic(GroupOrder k, const StabilityCondition& theta, Exec exec = Exec::parallel);

}  // namespace gcon
