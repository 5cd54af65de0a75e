#include "gcon/constellations.hpp"

#include <algorithm>
#include <bit>

namespace gcon {

IrrepSet::IrrepSet(GroupOrder k, std::uint64_t bits) : k_(k), bits_(bits) {}

int IrrepSet::size() const noexcept { return std::popcount(bits_); }

bool IrrepSet::is_full() const noexcept {
  return bits_ == (std::uint64_t{1} << k_.value()) - 1;
}

std::vector<Irrep> IrrepSet::members() const {
  std::vector<Irrep> out;
  for (int i = 0; i < k_.value(); ++i)
    if ((bits_ >> i) & 1) out.push_back(Irrep{i});
  return out;
}

std::vector<int> Submodule::boxes() const {
  std::vector<int> out;
  for (int t = 0; t < parent.size(); ++t)
    if ((members >> t) & 1) out.push_back(t);
  return out;
}

bool is_closed(const Stair& stair, BoxMask members) {
  const auto& s = stair.steps();
  for (std::size_t t = 0; t < s.size(); ++t) {
    const bool here = (members >> t) & 1;
    const bool next = (members >> (t + 1)) & 1;
    if (s[t] == Step::right && here && !next) return false;
    if (s[t] == Step::down && next && !here) return false;
  }
  return true;
}

namespace {

// Depth-first over boxes: the choice for box t+1 is forced whenever the step
// between t and t+1 propagates membership.
void extend(const StepWord& s, int t, BoxMask mask, int n, std::vector<BoxMask>& out) {
  if (t + 1 == n) {
    out.push_back(mask);
    return;
  }
  const bool here = (mask >> t) & 1;
  const BoxMask with_next = mask | (BoxMask{1} << (t + 1));
  if (s[t] == Step::right) {
    if (!here) extend(s, t + 1, mask, n, out);
    extend(s, t + 1, with_next, n, out);
  } else {
    extend(s, t + 1, mask, n, out);
    if (here) extend(s, t + 1, with_next, n, out);
  }
}

}  // namespace

std::vector<BoxMask> submodule_masks(const Stair& stair, bool proper_nonzero) {
  const int n = stair.size();
  std::vector<BoxMask> all;
  extend(stair.steps(), 0, 0, n, all);
  extend(stair.steps(), 0, 1, n, all);
  const BoxMask full = n == 64 ? ~BoxMask{0} : (BoxMask{1} << n) - 1;
  std::vector<BoxMask> out;
  out.reserve(all.size());
  for (BoxMask m : all)
    if (!proper_nonzero || (m != 0 && m != full)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Submodule> submodules(const Stair& stair, bool proper_nonzero) {
  std::vector<Submodule> out;
  for (BoxMask m : submodule_masks(stair, proper_nonzero)) out.push_back(Submodule{stair, m});
  return out;
}

IrrepSet rep_content(const Stair& stair, BoxMask members) {
  IrrepSet set(stair.order());
  for (int t = 0; t < stair.size(); ++t)
    if ((members >> t) & 1) set.insert(stair.irrep_at(t));
  return set;
}

IrrepSet rep_content(const Submodule& sub) { return rep_content(sub.parent, sub.members); }

}  // namespace gcon
