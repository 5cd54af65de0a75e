#include <doctest.h>

#include "gcon/oracle.hpp"
#include "gcon/stability.hpp"
#include "gcon/verify.hpp"
#include "support.hpp"

using namespace gcon;
using gcon::test::code_of;
using gcon::test::theta;

namespace {

IrrepSet set_of(int k, std::initializer_list<int> reps) {
  IrrepSet s{GroupOrder(k)};
  for (int r : reps) s.insert(Irrep{r});
  return s;
}

}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("theta construction") {
    CHECK(code_of([] { theta(3, {1, 1, 1}); }) == ErrorCode::theta_sum);
    CHECK(code_of([] { StabilityCondition(GroupOrder(3), {Rational(1), Rational(-1)}); }) ==
          ErrorCode::dimension_mismatch);
    const StabilityCondition t(GroupOrder(3), {Rational(1, 2), Rational(-1, 3), Rational(-1, 6)});
    CHECK(t.values()[2] == Rational(-1, 6));
    CHECK(describe(theta(3, {-4, 2, 2})) == "(-4, 2, 2)");
  }

  TEST_CASE("theta_of") {
    const auto t = theta(3, {-4, 2, 2});
    CHECK(theta_of(t, set_of(3, {1, 2})) == 4);
    CHECK(theta_of(t, set_of(3, {0, 1, 2})) == 0);
    CHECK(theta_of(t, set_of(3, {})) == 0);
  }

  TEST_CASE("classify at k=3 under (-4,2,2)") {
    const auto t = theta(3, {-4, 2, 2});
    CHECK(classify(make_stair(3, 2, "DR"), t) == Stability::stable);
    CHECK(min_submodule_value(make_stair(3, 2, "DR"), t) == 2);
    CHECK(classify(make_stair(3, 1, "DD"), t) == Stability::stable);
    CHECK(min_submodule_value(make_stair(3, 1, "DD"), t) == 2);
    CHECK(classify(make_stair(3, 1, "RR"), t) == Stability::unstable);
    CHECK(min_submodule_value(make_stair(3, 1, "RR"), t) == -4);
    CHECK(theta_of(t, rep_content(make_stair(3, 1, "RR"), 0b110)) == -2);
    CHECK(std::string(to_string(Stability::strictly_semistable)) == "STRICTLY_SEMISTABLE");
  }

  TEST_CASE("classify and min value agree with the oracle on random theta") {
    Rng rng(17);
    for (int k = 2; k <= 6; ++k) {
      const auto stairs = enumerate_stairs(GroupOrder(k));
      for (int i = 0; i < 10; ++i) {
        const StabilityCondition t = random_theta(GroupOrder(k), rng);
        for (const Stair& s : stairs) {
          CHECK(classify(s, t) == oracle::classify(s, t));
          Rational lowest = 0;
          bool first = true;
          for (BoxMask m : oracle::all_submodules(s, true)) {
            const Rational v = theta_of(t, rep_content(s, m));
            if (first || v < lowest) lowest = v;
            first = false;
          }
          CHECK(min_submodule_value(s, t) == lowest);
        }
      }
    }
  }

  TEST_CASE("favorite conditions") {
    CHECK(favorite_condition(make_stair(3, 1, "DD")) == theta(3, {-1, 1, 0}));
    CHECK(favorite_condition(make_stair(3, 2, "DR")) == theta(3, {-2, 1, 1}));
    CHECK(favorite_condition(make_stair(2, 0, "R")) == theta(2, {-1, 1}));
    for (int k = 2; k <= 7; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k)))
        CHECK(classify(s, favorite_condition(s)) == Stability::stable);
  }

  TEST_CASE("favorite values on submodules are 1 or 2") {
    for (int k = 2; k <= 6; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) {
        const auto fav = favorite_condition(s);
        for (BoxMask m : submodule_masks(s, true)) {
          const Rational v = theta_of(fav, rep_content(s, m));
          CHECK(v >= 1);
        }
      }
  }

  TEST_CASE("cone inequalities") {
    auto subsets = [](const Stair& s) {
      std::vector<IrrepSet> out;
      for (const ConeInequality& c : cone_inequalities(s)) out.push_back(c.subset);
      std::sort(out.begin(), out.end());
      return out;
    };
    auto sorted = [](std::vector<IrrepSet> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(subsets(make_stair(3, 1, "DD")) == sorted({set_of(3, {1}), set_of(3, {1, 2})}));
    CHECK(subsets(make_stair(3, 2, "DR")) ==
          sorted({set_of(3, {2}), set_of(3, {1}), set_of(3, {1, 2})}));
    CHECK(subsets(make_stair(2, 0, "R")) == sorted({set_of(2, {1})}));
  }

  TEST_CASE("genericity") {
    const Genericity g = genericity(theta(3, {-4, 2, 2}));
    CHECK(g.generic);
    CHECK(g.stable == std::vector<Stair>{make_stair(3, 1, "DD"), make_stair(3, 2, "DR"),
                                         make_stair(3, 0, "RR")});
    const Genericity zero = genericity(theta(2, {0, 0}));
    CHECK_FALSE(zero.generic);
    CHECK(zero.semistable_witness.has_value());
    CHECK_FALSE(zero.witness().empty());
    CHECK_FALSE(is_generic(GroupOrder(3), theta(3, {0, 1, -1})));
  }

  TEST_CASE("favorite of the k=3 hook lies on no wall") {
    const auto fav = favorite_condition(make_stair(3, 2, "DR"));
    CHECK(oracle::is_generic(fav));
    CHECK(is_generic(GroupOrder(3), fav));
  }

  TEST_CASE("favorite conditions lie on a wall from k=4 on") {
    for (int k = 4; k <= 6; ++k)
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) {
        const auto fav = favorite_condition(s);
        CHECK_FALSE(is_generic(GroupOrder(k), fav));
        CHECK_FALSE(oracle::is_generic(fav));
      }
  }

  TEST_CASE("toric genericity agrees with the wall oracle") {
    Rng rng(99);
    for (int k = 2; k <= 6; ++k)
      for (int i = 0; i < 60; ++i) {
        const StabilityCondition t = random_theta(GroupOrder(k), rng);
        const Genericity g = genericity(t);
        CHECK(g.generic == oracle::is_generic(t));
        if (g.generic) {
          REQUIRE(g.stable.size() == static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j) CHECK(g.stable[j].width() == j + 1);
        }
      }
  }
}
