#include <doctest.h>

#include "gcon/chambers.hpp"
#include "gcon/tautological.hpp"
#include "gcon/verify.hpp"

using namespace gcon;

TEST_SUITE("kernels") {
  TEST_CASE("stair enumeration") {
    for (int k : {2, 5, 9, 12})
      CHECK(enumerate_stairs(GroupOrder(k), Exec::serial) == enumerate_stairs(GroupOrder(k), Exec::parallel));
  }

  TEST_CASE("chamber enumeration") {
    for (int k = 2; k <= 6; ++k)
      CHECK(enumerate_chambers(GroupOrder(k), Exec::serial) ==
            enumerate_chambers(GroupOrder(k), Exec::parallel));
  }

  TEST_CASE("simple chambers and generator classes") {
    for (int k = 2; k <= 6; ++k) {
      const GroupOrder g(k);
      CHECK(enumerate_simple_chambers(g, Exec::serial) == enumerate_simple_chambers(g, Exec::parallel));
      CHECK(count_by_generators(g, Exec::serial) == count_by_generators(g, Exec::parallel));
    }
  }

  TEST_CASE("classification and genericity") {
    Rng rng(5);
    for (int k = 2; k <= 7; ++k) {
      const auto stairs = enumerate_stairs(GroupOrder(k));
      for (int i = 0; i < 5; ++i) {
        const StabilityCondition t = random_theta(GroupOrder(k), rng);
        CHECK(classify_all(stairs, t, Exec::serial) == classify_all(stairs, t, Exec::parallel));
        const Genericity a = genericity(t, Exec::serial), b = genericity(t, Exec::parallel);
        CHECK(a.generic == b.generic);
        CHECK(a.stable == b.stable);
        CHECK(a.semistable_witness == b.semistable_witness);
      }
      const StabilityCondition h = hilbert_theta(GroupOrder(k));
      CHECK(chamber_of_theta(GroupOrder(k), h, Exec::serial) == chamber_of_theta(GroupOrder(k), h, Exec::parallel));
    }
  }

  TEST_CASE("tautological sweep") {
    const auto chambers = enumerate_chambers(GroupOrder(5));
    CHECK(verify_tautological_all(chambers, Exec::serial) == verify_tautological_all(chambers, Exec::parallel));
  }

  TEST_CASE("verify report") {
    VerifyOptions serial, parallel;
    serial.exec = Exec::serial;
    for (int k : {3, 4}) {
      const VerifyReport a = verify(GroupOrder(k), serial), b = verify(GroupOrder(k), parallel);
      REQUIRE(a.results.size() == b.results.size());
      for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].verdict == b.results[i].verdict);
        CHECK(a.results[i].detail == b.results[i].detail);
      }
    }
  }
}
