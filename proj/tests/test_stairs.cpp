#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcon/error.hpp"
#include "gcon/oracle.hpp"
#include "gcon/stairs.hpp"
#include "support.hpp"

using namespace gcon;
using gcon::test::code_of;

namespace {

std::vector<int> irreps_of(const Stair& s) {
  std::vector<int> out;
  for (int t = 0; t < s.size(); ++t) out.push_back(s.irrep_at(t).index);
  return out;
}

}  // namespace

TEST_SUITE("stairs") {
  TEST_CASE("make_stair labels boxes consecutively") {
    const Stair column = make_stair(2, 1, "D");
    CHECK(irreps_of(column) == std::vector<int>{1, 0});
    CHECK(column.width() == 1);
    CHECK(column.height() == 2);

    const Stair hook = make_stair(3, 2, "DR");
    CHECK(irreps_of(hook) == std::vector<int>{2, 0, 1});
    CHECK(hook.width() == 2);
  }

  TEST_CASE("make_stair rejects bad input") {
    CHECK(code_of([] { make_stair(3, 0, "RRR"); }) == ErrorCode::bad_step_word);
    CHECK(code_of([] { make_stair(3, 0, "RX"); }) == ErrorCode::bad_step_word);
    CHECK(code_of([] { make_stair(3, 3, "RR"); }) == ErrorCode::irrep_mismatch);
    CHECK(code_of([] { make_stair(1, 0, ""); }) == ErrorCode::degenerate_group);
    CHECK(code_of([] { GroupOrder(GroupOrder::kMax + 1); }) == ErrorCode::degenerate_group);
  }

  TEST_CASE("enumerate_stairs counts k*2^(k-1) distinct G-stairs") {
    for (int k : {2, 3, 5, 8}) {
      const auto stairs = enumerate_stairs(GroupOrder(k));
      CHECK(stairs.size() == static_cast<std::size_t>(k) << (k - 1));
      CHECK(std::set<Stair>(stairs.begin(), stairs.end()).size() == stairs.size());
      for (const Stair& s : stairs) CHECK(oracle::satisfies_stair_condition(s));
    }
    CHECK(enumerate_stairs(GroupOrder(2)).size() == 4);
    CHECK(enumerate_stairs(GroupOrder(3)).size() == 12);
    CHECK(enumerate_stairs(GroupOrder(5)).size() == 80);
  }

  TEST_CASE("realize places boxes in the tableau") {
    const RealizedStair col = realize(make_stair(2, 1, "D"));
    CHECK(col.anchor() == Monomial{0, 1});
    CHECK(col.boxes() == std::vector<Monomial>{{0, 1}, {0, 0}});

    const RealizedStair row = realize(make_stair(3, 0, "RR"));
    CHECK(row.anchor() == Monomial{0, 0});
    CHECK(row.boxes() == std::vector<Monomial>{{0, 0}, {1, 0}, {2, 0}});

    CHECK(code_of([] { realize(make_stair(2, 0, "R"), Monomial{1, 0}); }) == ErrorCode::irrep_mismatch);
    CHECK(code_of([] { realize(make_stair(2, 1, "D"), Monomial{1, 0}); }) == ErrorCode::out_of_quadrant);
  }

  TEST_CASE("default realization always carries the right labels") {
    for (int k = 2; k <= 7; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) {
        const RealizedStair rs = realize(s);
        const auto boxes = rs.boxes();
        for (int t = 0; t < s.size(); ++t) CHECK(boxes[t].irrep(s.order()) == s.irrep_at(t));
        CHECK(rs.anchor().a < k);
        CHECK(std::min_element(boxes.begin(), boxes.end(),
                               [](Monomial p, Monomial q) { return p.b < q.b; })->b == 0);
        CHECK(abstract_stair_of(s.order(), boxes) == s);
      }
  }

  TEST_CASE("abstract_stair_of is invariant under Z-translation") {
    const Stair s = make_stair(4, 2, "RDR");
    auto boxes = realize(s).boxes();
    for (auto shift : {Monomial{4, 0}, Monomial{0, 4}, Monomial{1, 1}}) {
      std::vector<Monomial> moved;
      for (Monomial m : boxes) moved.push_back({m.a + shift.a, m.b + shift.b});
      CHECK(abstract_stair_of(s.order(), moved) == s);
    }
    std::vector<Monomial> broken{{0, 0}, {1, 1}};
    CHECK_FALSE(abstract_stair_of(GroupOrder(2), broken).has_value());
  }

  TEST_CASE("marker boxes") {
    const Markers col = marker_boxes(make_stair(3, 1, "DD"));
    CHECK(col.generators == std::vector<int>{2});
    CHECK(col.antigenerators == std::vector<int>{0});

    const Markers hook = marker_boxes(make_stair(3, 2, "DR"));
    CHECK(hook.generators == std::vector<int>{1});
    CHECK(hook.antigenerators == std::vector<int>{0, 2});

    const Markers zig = marker_boxes(make_stair(3, 0, "RD"));
    CHECK(zig.generators == std::vector<int>{0, 2});
    CHECK(zig.antigenerators == std::vector<int>{1});
  }

  TEST_CASE("marker boxes agree with the position oracle") {
    for (int k = 2; k <= 8; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) {
        const Markers fast = marker_boxes(s), slow = oracle::markers(s);
        CHECK(fast.generators == slow.generators);
        CHECK(fast.antigenerators == slow.antigenerators);
      }
  }

  TEST_CASE("dims") {
    CHECK(dims(make_stair(5, 0, "DDDD")).height == 5);
    CHECK(dims(make_stair(5, 0, "DDDD")).width == 1);
    CHECK(dims(make_stair(5, 0, "DRDR")).height == 3);
    CHECK(dims(make_stair(5, 0, "DRDR")).width == 3);
    CHECK(dims(make_stair(5, 0, "RRRR")).height == 1);
    CHECK(dims(make_stair(5, 0, "RRRR")).width == 5);
  }

  TEST_CASE("tails") {
    const Tails col = tails(make_stair(4, 0, "DDD"));
    CHECK(col.left == std::vector<int>{0, 1, 2});
    CHECK(col.right.empty());
    const Tails row = tails(make_stair(4, 0, "RRR"));
    CHECK(row.left.empty());
    CHECK(row.right == std::vector<int>{1, 2, 3});
    const Tails hook = tails(make_stair(3, 2, "DR"));
    CHECK(hook.left == std::vector<int>{0});
    CHECK(hook.right == std::vector<int>{2});
  }

  TEST_CASE("linking stairs") {
    const Stair col = make_stair(2, 1, "D");
    CHECK(to_string(linking_stair(col, LinkDirection::decreasing).word.steps()) == "DRD");
    CHECK(to_string(linking_stair(col, LinkDirection::increasing).word.steps()) == "DDD");
    CHECK(to_string(linking_stair(make_stair(3, 0, "RR"), LinkDirection::decreasing).word.steps()) ==
          "RRRRR");
    CHECK(linking_stair(col, LinkDirection::decreasing).word.size() == 4);
  }

  TEST_CASE("windows") {
    const Stair col = make_stair(2, 1, "D");
    const auto dec = windows(linking_stair(col, LinkDirection::decreasing));
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].stair == col);
    CHECK(dec[0].entry_cut == Cut::none);
    CHECK(dec[1].stair == make_stair(2, 0, "R"));
    CHECK(dec[1].entry_cut == Cut::horizontal);
    CHECK(dec[2].stair == col);
    CHECK(dec[2].entry_cut == Cut::vertical);

    const auto inc = windows(linking_stair(col, LinkDirection::increasing));
    CHECK(inc[1].stair == make_stair(2, 0, "D"));
    CHECK(inc[1].exit_cut == Cut::horizontal);
    CHECK(inc[2].exit_cut == Cut::none);
  }

  TEST_CASE("windows at offsets 1..k-1 have distinct labels") {
    for (int k = 2; k <= 6; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k)))
        for (auto dir : {LinkDirection::decreasing, LinkDirection::increasing}) {
          const auto ws = windows(linking_stair(s, dir));
          std::set<int> reps{s.first_rep().index};
          for (int o = 1; o < k; ++o) CHECK(reps.insert(ws[o].stair.first_rep().index).second);
          CHECK(ws[k].stair == s);
        }
  }

  TEST_CASE("same generator family") {
    CHECK(same_generator_family(make_stair(3, 1, "DD")).size() == 3);
    CHECK(same_generator_family(make_stair(3, 2, "DR")).size() == 3);
    CHECK(same_generator_family(make_stair(2, 0, "R")).size() == 2);
    for (int k = 2; k <= 6; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) {
        const auto family = same_generator_family(s);
        const Tails t = tails(s);
        CHECK(family.size() == t.left.size() + t.right.size() + 1);
        CHECK(std::find(family.begin(), family.end(), s) != family.end());
        for (const Stair& f : family) CHECK(generator_key(f) == generator_key(s));
      }
  }
}
