// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Run with --update-golden to rewrite the rendering fixtures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gcon/chambers.hpp"
#include "gcon/render.hpp"
#include "gcon/verify.hpp"

using namespace gcon;

namespace {

struct Fixture {
  const char* name;
  RealizedStair figure;
};

std::vector<Fixture> fixtures() {
  const Chamber cg3 = chamber_of_theta(GroupOrder(3), hilbert_theta(GroupOrder(3)));
  const Chamber fig5 = build_chamber(GroupOrder(5), Irrep{1}, {3, 4, 2, 2});
  return {{"chamber_stair_k3_hilbert", cg3.realized_chamber_stair()},
          {"chamber_stair_k5_3422", fig5.realized_chamber_stair()}};
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Returns an empty string when every fixture matches.
std::string check_golden(bool update) {
  for (const Fixture& f : fixtures()) {
    for (const char* ext : {".txt", ".svg"}) {
      const bool ascii = std::string(ext) == ".txt";
      const std::string first = ascii ? render_ascii(f.figure) : render_svg(f.figure);
      const std::string second = ascii ? render_ascii(f.figure) : render_svg(f.figure);
      if (first != second) return std::string(f.name) + ext + " rendering is not deterministic";
      const std::string path = std::string(GCON_GOLDEN_DIR) + "/" + f.name + ext;
      if (update) {
        std::ofstream(path, std::ios::binary) << first;
        continue;
      }
      const auto stored = slurp(path);
      if (!stored) return "missing golden file " + path;
      if (*stored != first) return path + " differs from the current rendering";
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const bool update = argc > 1 && std::string(argv[1]) == "--update-golden";
  const VerifyOptions options;
  int failed = 0;

  for (const Criterion& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    std::string range;
    if (c.id == 11) {
      Rng rng(options.seed);
      const CriterionResult r = check_round_trip(rng, 1000, 2, 7);
      if (r.verdict != Verdict::pass) failures.push_back(r.detail);
      if (const std::string g = check_golden(update); !g.empty()) failures.push_back(g);
      range = r.detail + ", golden files for 2 chamber stairs";
    } else {
      for (int k = c.k_min; k <= c.k_max; ++k) {
        const CriterionResult r = check_criterion(c.id, GroupOrder(k), options);
        if (r.verdict == Verdict::fail) failures.push_back("k=" + std::to_string(k) + ": " + r.detail);
      }
      range = "k=" + std::to_string(c.k_min) + ".." + std::to_string(c.k_max);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (failures.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
              << " [" << range << ", " << timing << "]\n";
    for (const std::string& f : failures) std::cout << "      " << f << '\n';
    failed += !failures.empty();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? 1 : 0;
}
