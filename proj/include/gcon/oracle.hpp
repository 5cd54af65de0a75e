#pragma once

#include <vector>

#include "gcon/constellations.hpp"
#include "gcon/stability.hpp"
#include "gcon/stairs.hpp"

/// Brute-force reference evaluators. They work from box positions and the
/// x / y actions on the tableau instead of the step word, and enumerate all
/// 2^k subsets, so they stay independent of the fast paths they check.
namespace gcon::oracle {

/// x * box and y * box land on the neighbouring box to the right / above, or
/// vanish when that cell is not part of the stair.
std::vector<BoxMask> all_submodules(const Stair& stair, bool proper_nonzero);

Stability classify(const Stair& stair, const StabilityCondition& theta);

/// Boxes hit by neither x nor y, and boxes killed by both.
Markers markers(const Stair& stair);

/// Wall test on the root hyperplanes: theta is generic iff no proper cyclic
/// interval rho_i, ..., rho_(i+l-1) of irreps has theta-sum zero.
bool is_generic(const StabilityCondition& theta);

/// No box has a neighbour at relative (+1, +1) or (-1, -1).
bool satisfies_stair_condition(const Stair& stair);

}  // namespace gcon::oracle
