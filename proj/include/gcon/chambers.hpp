#pragma once

#include <map>
#include <vector>

#include "gcon/exec.hpp"
#include "gcon/stability.hpp"
#include "gcon/stairs.hpp"

namespace gcon {

/// Complete invariant of a chamber: the abstract chamber stair.
struct ChamberKey {
  Irrep first_rep;
  StepWord word;

  friend auto operator<=>(const ChamberKey&, const ChamberKey&) = default;
};

/// A chamber of generic stability conditions, described by its k toric
/// stable constellations S_1..S_k (S_j has width j). S_{j+1} is the window at
/// offset o_{j+1} of the decreasing linking stair of S_j.
class Chamber {
 public:
  GroupOrder order() const noexcept { return k_; }
  Irrep first_rep() const noexcept { return stairs_.front().first_rep(); }
  /// o_2..o_k, each in 1..k.
  const std::vector<int>& offsets() const noexcept { return offsets_; }
  /// S_1..S_k; index j-1 holds the stair of width j.
  const std::vector<Stair>& stairs() const noexcept { return stairs_; }
  /// Box index of the first box of S_j inside the chamber stair.
  const std::vector<int>& starts() const noexcept { return starts_; }
  const Stair& chamber_stair() const noexcept { return chamber_stair_; }
  RealizedStair realized_chamber_stair() const { return realize(chamber_stair_); }
  /// Union of the cone inequalities of S_1..S_k, deduplicated.
  const std::vector<ConeInequality>& inequalities() const noexcept { return inequalities_; }
  /// Sum of the favorite conditions of S_1..S_k.
  const StabilityCondition& representative() const noexcept { return representative_; }

  ChamberKey key() const { return ChamberKey{chamber_stair_.first_rep(), chamber_stair_.steps()}; }

  friend bool operator==(const Chamber& a, const Chamber& b) {
    return a.k_ == b.k_ && a.first_rep() == b.first_rep() && a.offsets_ == b.offsets_;
  }

 private:
  friend Chamber build_chamber(GroupOrder, Irrep, std::vector<int>);

  Chamber(GroupOrder k, std::vector<int> offsets, std::vector<Stair> stairs,
          std::vector<int> starts, Stair chamber_stair, std::vector<ConeInequality> inequalities,
          StabilityCondition representative)
      : k_(k),
        offsets_(std::move(offsets)),
        stairs_(std::move(stairs)),
        starts_(std::move(starts)),
        chamber_stair_(std::move(chamber_stair)),
        inequalities_(std::move(inequalities)),
        representative_(std::move(representative)) {}

  GroupOrder k_;
  std::vector<int> offsets_;
  std::vector<Stair> stairs_;
  std::vector<int> starts_;
  Stair chamber_stair_;
  std::vector<ConeInequality> inequalities_;
  StabilityCondition representative_;
};

std::string describe(const Chamber& chamber);

/// S_1 is the column stair starting at `first_rep`; every offset must pick a
/// window entered through a horizontal left cut.
Chamber build_chamber(GroupOrder k, Irrep first_rep, std::vector<int> offsets);

/// All k! chambers, ordered by (first_rep, offsets).
std::vector<Chamber> enumerate_chambers(GroupOrder k, Exec exec = Exec::parallel);

StabilityCondition representative_theta(const Chamber& chamber);

/// Strict membership in the open cone cut out by the chamber's inequalities.
bool contains(const Chamber& chamber, const StabilityCondition& theta);

/// The chamber containing a generic theta, assembled from its k stable
/// stairs. Throws ErrorCode::not_generic with a witness otherwise.
Chamber chamber_of_theta(GroupOrder k, const StabilityCondition& theta,
                         Exec exec = Exec::parallel);

/// Sorted decreasing-link offsets of the windows that can follow `stair` in
/// some chamber, i.e. those entered through a horizontal left cut.
std::vector<int> admissible_offsets(const Stair& stair);

/// The simple chamber in which `stair` is characteristic.
Chamber simple_chamber_of(const Stair& stair);

/// The stairs of the chamber whose generators, placed inside the chamber
/// stair, are exactly the generators of the chamber stair.
std::vector<Stair> characteristic_stairs(const Chamber& chamber);
bool is_simple(const Chamber& chamber);

std::vector<Chamber> simple_chambers_by_filter(GroupOrder k, Exec exec = Exec::parallel);
std::vector<Chamber> simple_chambers_by_construction(GroupOrder k, Exec exec = Exec::parallel);

/// All k * 2^(k-2) simple chambers. Both routes above are computed and must
/// agree; a disagreement raises ErrorCode::internal.
std::vector<Chamber> enumerate_simple_chambers(GroupOrder k, Exec exec = Exec::parallel);

struct Compatibility {
  int offset = 0;       // window offset of b in the linking stair of a
  bool by_height = false;
  bool by_cut = false;
};

/// Evaluates the height and cut criteria for `b` as a window of the linking
/// stair of `a`. Throws ErrorCode::not_a_window if b is not one.
Compatibility compatibility(const Stair& a, const Stair& b, LinkDirection direction);

/// True iff a and b can be consecutive stable constellations of a chamber.
/// Raises ErrorCode::internal if the height and cut criteria disagree.
bool compatible_pair(const Stair& a, const Stair& b, LinkDirection direction);

/// Number of generator-set classes (up to Z-translation) with r generators,
/// counted over all G-stairs.
std::map<int, long long> count_by_generators(GroupOrder k, Exec exec = Exec::parallel);

/// Stars-and-bars closed form of the same counts.
std::map<int, long long> count_by_generators_formula(GroupOrder k);

/// theta = (-2k+2, 2, ..., 2), which lies in the G-Hilbert chamber.
StabilityCondition hilbert_theta(GroupOrder k);
/// theta = (2k-2, -2, ..., -2), which lies in the opposite chamber.
StabilityCondition opposite_hilbert_theta(GroupOrder k);

}  // namespace gcon
