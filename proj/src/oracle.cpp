#include "gcon/oracle.hpp"

#include <map>

namespace gcon::oracle {

namespace {

std::map<Offset2, int> cells(const Stair& stair) {
  std::map<Offset2, int> index;
  const auto pos = stair.positions();
  for (int t = 0; t < static_cast<int>(pos.size()); ++t) index[pos[t]] = t;
  return index;
}

int neighbour(const std::map<Offset2, int>& index, Offset2 p, int dx, int dy) {
  auto it = index.find(Offset2{p.dx + dx, p.dy + dy});
  return it == index.end() ? -1 : it->second;
}

}  // namespace

std::vector<BoxMask> all_submodules(const Stair& stair, bool proper_nonzero) {
  const int n = stair.size();
  const auto index = cells(stair);
  const auto pos = stair.positions();
  std::vector<BoxMask> out;
  const BoxMask full = (BoxMask{1} << n) - 1;
  for (BoxMask m = 0; m <= full; ++m) {
    if (proper_nonzero && (m == 0 || m == full)) continue;
    bool closed = true;
    for (int t = 0; t < n && closed; ++t) {
      if (!((m >> t) & 1)) continue;
      for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
        const int u = neighbour(index, pos[t], dx, dy);
        if (u >= 0 && !((m >> u) & 1)) closed = false;
      }
    }
    if (closed) out.push_back(m);
  }
  return out;
}

Stability classify(const Stair& stair, const StabilityCondition& theta) {
  bool zero = false;
  for (BoxMask m : all_submodules(stair, true)) {
    Rational v = 0;
    for (int t = 0; t < stair.size(); ++t)
      if ((m >> t) & 1) v += theta.values()[stair.irrep_at(t).index];
    if (v < 0) return Stability::unstable;
    if (v == 0) zero = true;
  }
  return zero ? Stability::strictly_semistable : Stability::stable;
}

Markers markers(const Stair& stair) {
  const auto index = cells(stair);
  const auto pos = stair.positions();
  Markers m;
  for (int t = 0; t < stair.size(); ++t) {
    if (neighbour(index, pos[t], -1, 0) < 0 && neighbour(index, pos[t], 0, -1) < 0)
      m.generators.push_back(t);
    if (neighbour(index, pos[t], 1, 0) < 0 && neighbour(index, pos[t], 0, 1) < 0)
      m.antigenerators.push_back(t);
  }
  return m;
}

bool satisfies_stair_condition(const Stair& stair) {
  const auto index = cells(stair);
  for (const auto& [p, t] : index)
    if (neighbour(index, p, 1, 1) >= 0 || neighbour(index, p, -1, -1) >= 0) return false;
  return true;
}

bool is_generic(const StabilityCondition& theta) {
  const int k = theta.order().value();
  for (int start = 0; start < k; ++start) {
    Rational sum = 0;
    for (int len = 1; len < k; ++len) {
      sum += theta.values()[(start + len - 1) % k];
      if (sum == 0) return false;
    }
  }
  return true;
}

}  // namespace gcon::oracle
