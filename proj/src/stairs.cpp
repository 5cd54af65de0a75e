#include "gcon/stairs.hpp"

#include <algorithm>

#include "gcon/error.hpp"

namespace gcon {

GroupOrder::GroupOrder(int k) : k_(k) {
  if (k < 2)
    throw Error(ErrorCode::degenerate_group,
                "group order must be at least 2 (got " + std::to_string(k) + ")");
  if (k > kMax)
    throw Error(ErrorCode::degenerate_group,
                "group order " + std::to_string(k) + " exceeds the supported maximum " +
                    std::to_string(kMax));
}

Irrep make_irrep(GroupOrder k, long long index) {
  const long long m = k.value();
  return Irrep{static_cast<int>(((index % m) + m) % m)};
}

StepWord parse_steps(std::string_view text) {
  StepWord steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'R')
      steps.push_back(Step::right);
    else if (c == 'D')
      steps.push_back(Step::down);
    else
      throw Error(ErrorCode::bad_step_word,
                  "step word may only contain 'R' and 'D': '" + std::string(text) + "'");
  }
  return steps;
}

std::string to_string(const StepWord& steps) {
  std::string s;
  s.reserve(steps.size());
  for (Step st : steps) s.push_back(static_cast<char>(st));
  return s;
}

Stair::Stair(GroupOrder k, Irrep first_rep, StepWord steps)
    : k_(k), first_rep_(make_irrep(k, first_rep.index)), steps_(std::move(steps)) {
  if (size() > 64)
    throw Error(ErrorCode::bad_step_word, "stairs are limited to 64 boxes");
  rights_ = static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::right));
}

Irrep Stair::irrep_at(int box) const {
  return make_irrep(k_, static_cast<long long>(first_rep_.index) + box);
}

Offset2 Stair::position(int box) const {
  Offset2 p;
  for (int t = 0; t < box; ++t) {
    if (steps_[t] == Step::right)
      ++p.dx;
    else
      --p.dy;
  }
  return p;
}

std::vector<Offset2> Stair::positions() const {
  std::vector<Offset2> out;
  out.reserve(size());
  Offset2 p;
  out.push_back(p);
  for (Step s : steps_) {
    if (s == Step::right)
      ++p.dx;
    else
      --p.dy;
    out.push_back(p);
  }
  return out;
}

Stair Stair::substair(int first, int count) const {
  if (first < 0 || count < 1 || first + count > size())
    throw Error(ErrorCode::internal, "substair range out of bounds");
  StepWord w(steps_.begin() + first, steps_.begin() + first + count - 1);
  return Stair(k_, irrep_at(first), std::move(w));
}

std::strong_ordering operator<=>(const Stair& a, const Stair& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.first_rep_ <=> b.first_rep_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(),
                                                b.steps_.begin(), b.steps_.end());
}

std::string describe(const Stair& stair) {
  return "(k=" + std::to_string(stair.order().value()) +
         ", first_rep=" + std::to_string(stair.first_rep().index) + ", \"" +
         to_string(stair.steps()) + "\")";
}

Stair make_stair(GroupOrder k, Irrep first_rep, StepWord steps) {
  if (static_cast<int>(steps.size()) != k.value() - 1)
    throw Error(ErrorCode::bad_step_word,
                "step word length " + std::to_string(steps.size()) + " != k - 1 = " +
                    std::to_string(k.value() - 1));
  if (first_rep.index < 0 || first_rep.index >= k.value())
    throw Error(ErrorCode::irrep_mismatch,
                "irrep index " + std::to_string(first_rep.index) + " outside 0..k-1");
  return Stair(k, first_rep, std::move(steps));
}

Stair make_stair(int k, int first_rep, std::string_view steps) {
  return make_stair(GroupOrder(k), Irrep{first_rep}, parse_steps(steps));
}

namespace {

Stair stair_from_index(GroupOrder k, std::uint64_t index) {
  const int n = k.value() - 1;
  const std::uint64_t bits = index & ((std::uint64_t{1} << n) - 1);
  StepWord w(n);
  for (int p = 0; p < n; ++p)
    w[p] = (bits >> (n - 1 - p)) & 1 ? Step::right : Step::down;
  return Stair(k, Irrep{static_cast<int>(index >> n)}, std::move(w));
}

}  // namespace

std::vector<Stair> enumerate_stairs(GroupOrder k, Exec exec) {
  const std::int64_t total = static_cast<std::int64_t>(k.value()) << (k.value() - 1);
  std::vector<Stair> out(total, Stair(k, Irrep{0}, StepWord(k.value() - 1, Step::down)));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) out[i] = stair_from_index(k, i);
  } else {
    for (std::int64_t i = 0; i < total; ++i) out[i] = stair_from_index(k, i);
  }
  return out;
}

bool is_generator(const Stair& stair, int box) {
  const auto& s = stair.steps();
  const int last = stair.size() - 1;
  return (box == 0 || s[box - 1] == Step::down) && (box == last || s[box] == Step::right);
}

bool is_antigenerator(const Stair& stair, int box) {
  const auto& s = stair.steps();
  const int last = stair.size() - 1;
  return (box == 0 || s[box - 1] == Step::right) && (box == last || s[box] == Step::down);
}

Markers marker_boxes(const Stair& stair) {
  Markers m;
  for (int t = 0; t < stair.size(); ++t) {
    if (is_generator(stair, t)) m.generators.push_back(t);
    if (is_antigenerator(stair, t)) m.antigenerators.push_back(t);
  }
  return m;
}

Dims dims(const Stair& stair) { return Dims{stair.height(), stair.width()}; }

Tails tails(const Stair& stair) {
  const Markers m = marker_boxes(stair);
  Tails t;
  for (int b = 0; b < m.generators.front(); ++b) t.left.push_back(b);
  for (int b = m.generators.back() + 1; b < stair.size(); ++b) t.right.push_back(b);
  return t;
}

std::vector<Monomial> RealizedStair::boxes() const {
  std::vector<Monomial> out;
  out.reserve(stair_.size());
  for (const Offset2& p : stair_.positions()) out.push_back({anchor_.a + p.dx, anchor_.b + p.dy});
  return out;
}

Monomial RealizedStair::box(int index) const {
  const Offset2 p = stair_.position(index);
  return {anchor_.a + p.dx, anchor_.b + p.dy};
}

RealizedStair realize(const Stair& stair, std::optional<Monomial> anchor) {
  if (!anchor) {
    const int k = stair.order().value();
    const int a = ((stair.first_rep().index + stair.height() - 1) % k + k) % k;
    return RealizedStair(stair, Monomial{a, stair.height() - 1});
  }
  if (anchor->irrep(stair.order()) != stair.first_rep())
    throw Error(ErrorCode::irrep_mismatch,
                "anchor x^" + std::to_string(anchor->a) + "y^" + std::to_string(anchor->b) +
                    " carries irrep " + std::to_string(anchor->irrep(stair.order()).index) +
                    ", stair starts with " + std::to_string(stair.first_rep().index));
  if (anchor->a < 0 || anchor->b < stair.height() - 1)
    throw Error(ErrorCode::out_of_quadrant, "realized stair would leave the first quadrant");
  return RealizedStair(stair, *anchor);
}

std::optional<Stair> abstract_stair_of(GroupOrder k, std::span<const Monomial> boxes) {
  if (boxes.empty()) return std::nullopt;
  std::vector<Monomial> sorted(boxes.begin(), boxes.end());
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& p, const Monomial& q) {
    return p.a != q.a ? p.a < q.a : p.b > q.b;
  });
  StepWord w;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const int da = sorted[i].a - sorted[i - 1].a;
    const int db = sorted[i].b - sorted[i - 1].b;
    if (da == 1 && db == 0)
      w.push_back(Step::right);
    else if (da == 0 && db == -1)
      w.push_back(Step::down);
    else
      return std::nullopt;
  }
  if (w.size() + 1 > 64) return std::nullopt;
  return Stair(k, sorted.front().irrep(k), std::move(w));
}

const char* to_string(LinkDirection direction) noexcept {
  return direction == LinkDirection::decreasing ? "decreasing" : "increasing";
}

const char* to_string(Cut cut) noexcept {
  switch (cut) {
    case Cut::none: return "none";
    case Cut::horizontal: return "horizontal";
    case Cut::vertical: return "vertical";
  }
  return "none";
}

LinkingStair linking_stair(const Stair& stair, LinkDirection direction) {
  StepWord w = stair.steps();
  w.push_back(direction == LinkDirection::decreasing ? Step::right : Step::down);
  w.insert(w.end(), stair.steps().begin(), stair.steps().end());
  return LinkingStair{stair, direction, Stair(stair.order(), stair.first_rep(), std::move(w))};
}

std::vector<Window> windows(const LinkingStair& link) {
  const int k = link.base.order().value();
  const StepWord& s = link.word.steps();
  std::vector<Window> out;
  out.reserve(k + 1);
  for (int o = 0; o <= k; ++o) {
    Cut entry = Cut::none;
    if (o > 0) entry = s[o - 1] == Step::down ? Cut::horizontal : Cut::vertical;
    Cut exit = Cut::none;
    if (o < k) exit = s[o + k - 1] == Step::right ? Cut::vertical : Cut::horizontal;
    out.push_back(Window{o, link.word.substair(o, k), entry, exit});
  }
  return out;
}

std::vector<Stair> same_generator_family(const Stair& stair) {
  const Markers m = marker_boxes(stair);
  const int g_first = m.generators.front();
  const int g_last = m.generators.back();
  const StepWord core(stair.steps().begin() + g_first, stair.steps().begin() + g_last);
  const int tail = stair.size() - (g_last - g_first + 1);
  const Irrep gen_rep = stair.irrep_at(g_first);

  std::vector<Stair> family;
  for (int left = 0; left <= tail; ++left) {
    StepWord w(left, Step::down);
    w.insert(w.end(), core.begin(), core.end());
    w.insert(w.end(), tail - left, Step::right);
    family.emplace_back(stair.order(),
                        make_irrep(stair.order(), static_cast<long long>(gen_rep.index) - left),
                        std::move(w));
  }
  std::sort(family.begin(), family.end());
  return family;
}

GeneratorKey generator_key(const Stair& stair) {
  const Markers m = marker_boxes(stair);
  const int g_first = m.generators.front();
  const int g_last = m.generators.back();
  return GeneratorKey{
      stair.irrep_at(g_first),
      StepWord(stair.steps().begin() + g_first, stair.steps().begin() + g_last)};
}

}  // namespace gcon
