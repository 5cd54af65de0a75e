#pragma once

#include <cstdint>
#include <vector>

#include "gcon/stairs.hpp"

namespace gcon {

/// Bit t set means box t of a stair is present.
using BoxMask = std::uint64_t;

/// A set of irreducible representations of Z/kZ, bit i standing for rho_i.
class IrrepSet {
 public:
  IrrepSet(GroupOrder k, std::uint64_t bits = 0);

  GroupOrder order() const noexcept { return k_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Irrep r) const noexcept { return (bits_ >> r.index) & 1; }
  void insert(Irrep r) noexcept { bits_ |= std::uint64_t{1} << r.index; }
  int size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept;
  std::vector<Irrep> members() const;

  friend bool operator==(const IrrepSet&, const IrrepSet&) = default;
  friend auto operator<=>(const IrrepSet& a, const IrrepSet& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  GroupOrder k_;
  std::uint64_t bits_;
};

/// A G-equivariant C[x,y]-submodule of the constellation carried by a stair,
/// given as the boxes it contains.
struct Submodule {
  Stair parent;
  BoxMask members = 0;

  std::vector<int> boxes() const;

  friend bool operator==(const Submodule&, const Submodule&) = default;
};

/// x moves box t to t+1 across a RIGHT step, y moves box t+1 to t across a
/// DOWN step; a submodule must be stable under both.
bool is_closed(const Stair& stair, BoxMask members);

/// Closed box sets ordered by mask value. With `proper_nonzero` the empty and
/// the full set are dropped.
std::vector<BoxMask> submodule_masks(const Stair& stair, bool proper_nonzero);
std::vector<Submodule> submodules(const Stair& stair, bool proper_nonzero);

IrrepSet rep_content(const Stair& stair, BoxMask members);
IrrepSet rep_content(const Submodule& sub);

}  // namespace gcon
