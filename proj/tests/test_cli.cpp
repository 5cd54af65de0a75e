#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gcon/cli.hpp"

using namespace gcon;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify summary") {
    const Run r = run({"verify", "--k", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "chambers=24 simple=16 stairs=32 taut=pass\n");
    CHECK(r.err.empty());
  }

  TEST_CASE("verbose verify prints one line per criterion") {
    const Run r = run({"verify", "--k", "5", "--verbose"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 12);
    CHECK(r.out.find("criterion 11 PASS") != std::string::npos);
  }

  TEST_CASE("listing commands") {
    CHECK(lines(run({"stairs", "--k", "4"}).out) == 32);
    CHECK(lines(run({"chambers", "--k", "4"}).out) == 24);
    CHECK(lines(run({"chambers", "--k", "4", "--simple"}).out) == 16);
    CHECK(lines(run({"simple-chambers", "--k", "5"}).out) == 40);
    CHECK(run({"chambers", "--k", "2"}).out ==
          "{\"kind\":\"chamber\",\"schema_version\":1,\"k\":2,\"first_rep\":0,\"offsets\":[1]}\n"
          "{\"kind\":\"chamber\",\"schema_version\":1,\"k\":2,\"first_rep\":1,\"offsets\":[1]}\n");
    CHECK(run({"counts", "--k", "3"}).out.find("\"chambers\":6") != std::string::npos);
  }

  TEST_CASE("stability") {
    const Run r = run({"stability", "--k", "3", "--theta", R"({"k":3,"values":["-4","2","2"]})",
                       "--stair", R"({"k":3,"first_rep":1,"steps":"DD"})"});
    CHECK(r.code == 0);
    CHECK(r.out == "STABLE\n");
    const Run mismatch = run({"stability", "--k", "4", "--theta", R"({"k":3,"values":["-4","2","2"]})",
                              "--stair", R"({"k":3,"first_rep":1,"steps":"DD"})"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.out.empty());
  }

  TEST_CASE("chamber-of") {
    const Run ok = run({"chamber-of", "--k", "3", "--theta", R"({"k":3,"values":["-4","2","2"]})"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"offsets\":[1,1]") != std::string::npos);
    const Run wall = run({"chamber-of", "--k", "3", "--theta", R"({"k":3,"values":["0","1","-1"]})"});
    CHECK(wall.code == 1);
    CHECK(wall.out.empty());
    CHECK(wall.err.find("not_generic") != std::string::npos);
    CHECK(wall.err.find("first_rep") != std::string::npos);
  }

  TEST_CASE("fibers") {
    const Run r = run({"fibers", "--chamber", R"({"k":2,"first_rep":1,"offsets":[1]})"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    CHECK(run({"fibers", "--chamber", R"({"k":2,"first_rep":1,"offsets":[2]})"}).code == 1);
  }

  TEST_CASE("render") {
    CHECK(run({"render", "--format", "ascii"}, R"({"k":3,"first_rep":2,"steps":"DR"})").out ==
          "[2]\n[0][1]\n");
    CHECK(run({"render"}, R"({"k":2,"first_rep":1,"offsets":[1]})").out == "[1]\n[0][1]\n");
    CHECK(run({"render", "--format", "svg"}, R"({"k":2,"first_rep":1,"steps":"D"})").out.find("<svg") == 0);
    CHECK(run({"render", "--format", "json"}, R"({"k":2,"first_rep":1,"steps":"D"})").out ==
          "{\"kind\":\"stair\",\"schema_version\":1,\"k\":2,\"first_rep\":1,\"steps\":\"D\"}\n");
    CHECK(run({"render"}, "").code == 1);
    CHECK(run({"render"}, "  \n").code == 1);
    CHECK(run({"render"}, R"({"k":3,"values":["-4","2","2"]})").code == 1);
    CHECK(run({"render", "--format", "png"}, R"({"k":2,"first_rep":1,"steps":"D"})").code == 1);
  }

  TEST_CASE("usage errors") {
    const Run unknown = run({"stairs", "--k", "3", "--bogus"});
    CHECK(unknown.code == 1);
    CHECK(unknown.out.empty());
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"stairs"}).code == 1);
    CHECK(run({"stairs", "--k", "1"}).code == 1);
    CHECK(run({"verify", "--k", "11"}).code == 1);
    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("chamber-of") != std::string::npos);
  }
}
