#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcon/exec.hpp"

namespace gcon {

/// Order k of the cyclic group Z/kZ acting on the plane.
class GroupOrder {
 public:
  /// Box sets are stored as 64-bit masks, which bounds k.
  static constexpr int kMax = 62;

  explicit GroupOrder(int k);

  int value() const noexcept { return k_; }

  friend auto operator<=>(const GroupOrder&, const GroupOrder&) = default;

 private:
  int k_;
};

/// Index of an irreducible representation rho_i, always reduced mod k.
struct Irrep {
  int index = 0;

  friend auto operator<=>(const Irrep&, const Irrep&) = default;
};

Irrep make_irrep(GroupOrder k, long long index);

/// x^a y^b; also a box of the representation tableau.
struct Monomial {
  int a = 0;
  int b = 0;

  /// x^a y^b transforms under rho_{a - b}.
  Irrep irrep(GroupOrder k) const { return make_irrep(k, static_cast<long long>(a) - b); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Step : char { down = 'D', right = 'R' };
using StepWord = std::vector<Step>;

StepWord parse_steps(std::string_view text);
std::string to_string(const StepWord& steps);

/// Offset of a box relative to the first box of its stair. RIGHT moves
/// (+1, 0), DOWN moves (0, -1).
struct Offset2 {
  int dx = 0;
  int dy = 0;

  friend auto operator<=>(const Offset2&, const Offset2&) = default;
};

/// An abstract stair: a first box label plus the RIGHT/DOWN path through the
/// remaining boxes. Box t carries irrep first_rep + t. G-stairs have exactly
/// k boxes; linking stairs and chamber stairs use the same type with more.
class Stair {
 public:
  Stair(GroupOrder k, Irrep first_rep, StepWord steps);

  GroupOrder order() const noexcept { return k_; }
  Irrep first_rep() const noexcept { return first_rep_; }
  const StepWord& steps() const noexcept { return steps_; }

  int size() const noexcept { return static_cast<int>(steps_.size()) + 1; }
  bool is_g_stair() const noexcept { return size() == k_.value(); }

  Irrep irrep_at(int box) const;
  Offset2 position(int box) const;
  std::vector<Offset2> positions() const;

  int width() const noexcept { return rights_ + 1; }
  int height() const noexcept { return size() - rights_; }

  /// The sub-path covering boxes [first, first + count).
  Stair substair(int first, int count) const;

  friend bool operator==(const Stair& a, const Stair& b) {
    return a.k_ == b.k_ && a.first_rep_ == b.first_rep_ && a.steps_ == b.steps_;
  }
  friend std::strong_ordering operator<=>(const Stair& a, const Stair& b);

 private:
  GroupOrder k_;
  Irrep first_rep_;
  StepWord steps_;
  int rights_ = 0;
};

std::string describe(const Stair& stair);

/// Validated G-stair: the step word must have length k - 1.
Stair make_stair(GroupOrder k, Irrep first_rep, StepWord steps);
Stair make_stair(int k, int first_rep, std::string_view steps);

/// All k * 2^(k-1) abstract G-stairs, ordered by (first_rep, steps).
std::vector<Stair> enumerate_stairs(GroupOrder k, Exec exec = Exec::parallel);

struct Markers {
  std::vector<int> generators;
  std::vector<int> antigenerators;
};

bool is_generator(const Stair& stair, int box);
bool is_antigenerator(const Stair& stair, int box);

/// Generators are the lower corners, antigenerators the upper corners.
Markers marker_boxes(const Stair& stair);

struct Dims {
  int height = 0;
  int width = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

Dims dims(const Stair& stair);

struct Tails {
  std::vector<int> left;   // boxes above the first generator
  std::vector<int> right;  // boxes right of the last generator
};

Tails tails(const Stair& stair);

/// A stair placed in the representation tableau with its first (upper-left)
/// box at `anchor`.
class RealizedStair {
 public:
  const Stair& stair() const noexcept { return stair_; }
  Monomial anchor() const noexcept { return anchor_; }
  std::vector<Monomial> boxes() const;
  Monomial box(int index) const;

  friend bool operator==(const RealizedStair&, const RealizedStair&) = default;

 private:
  friend RealizedStair realize(const Stair&, std::optional<Monomial>);
  RealizedStair(Stair stair, Monomial anchor) : stair_(std::move(stair)), anchor_(anchor) {}

  Stair stair_;
  Monomial anchor_;
};

/// Without an anchor the stair sits on the x-axis, at the leftmost column
/// whose label matches: anchor (a, height - 1) with 0 <= a < k. This is
/// (0, height - 1) whenever first_rep = 1 - height mod k.
RealizedStair realize(const Stair& stair, std::optional<Monomial> anchor = std::nullopt);

/// Reads a set of tableau boxes back as an abstract stair, if they form one
/// (a connected RIGHT/DOWN path). Translating the boxes by (k,0), (0,k) or
/// (1,1) gives back the same abstract stair.
std::optional<Stair> abstract_stair_of(GroupOrder k, std::span<const Monomial> boxes);

enum class LinkDirection { decreasing, increasing };
enum class Cut { none, horizontal, vertical };

const char* to_string(LinkDirection direction) noexcept;
const char* to_string(Cut cut) noexcept;

/// Two copies of a G-stair glued end to end: to the right of the last box
/// (decreasing) or below it (increasing).
struct LinkingStair {
  Stair base;
  LinkDirection direction;
  Stair word;  // 2k boxes
};

LinkingStair linking_stair(const Stair& stair, LinkDirection direction);

struct Window {
  int offset = 0;
  Stair stair;
  Cut entry_cut = Cut::none;  // cut at the window's first box
  Cut exit_cut = Cut::none;   // cut at the window's last box
};

/// The k + 1 length-k windows at offsets 0..k.
std::vector<Window> windows(const LinkingStair& link);

/// All G-stairs with the same generators as `stair`: the generator core with
/// its tail boxes redistributed between the left and the right tail.
std::vector<Stair> same_generator_family(const Stair& stair);

/// Identifies the generator set of a stair up to Z-translation: the irrep of
/// the first generator and the path from the first to the last generator.
struct GeneratorKey {
  Irrep first_generator;
  StepWord core;

  friend auto operator<=>(const GeneratorKey&, const GeneratorKey&) = default;
};

GeneratorKey generator_key(const Stair& stair);

}  // namespace gcon
