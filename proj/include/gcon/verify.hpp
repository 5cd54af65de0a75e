#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gcon/chambers.hpp"
#include "gcon/exec.hpp"
#include "gcon/json_io.hpp"
#include "gcon/stability.hpp"
#include "gcon/stairs.hpp"

namespace gcon {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x6c0e57a11a7105ULL;

// ---- random instances -------------------------------------------------------

Stair random_stair(GroupOrder k, Rng& rng);

/// Mixes small integer vectors (which hit walls often) with rationals of
/// denominator up to 6. The last entry balances the sum.
StabilityCondition random_theta(GroupOrder k, Rng& rng);

/// Uniform over the k! chambers.
Chamber random_chamber(GroupOrder k, Rng& rng);

/// Any Document kind with k in [k_min, k_max]. Fiber and count reports are
/// kept to k <= 6.
Document random_document(Rng& rng, int k_min = 2, int k_max = 7);

// ---- acceptance criteria ----------------------------------------------------

enum class Verdict { pass, fail, skipped };
const char* to_string(Verdict v) noexcept;

struct CriterionResult {
  int id = 0;
  Verdict verdict = Verdict::skipped;
  std::string detail;
  std::optional<long long> count;  // chambers, simple chambers or stairs found
};

struct Criterion {
  int id;
  const char* title;
  int k_min;
  int k_max;
};

/// The eleven criteria with the orders each one covers.
const std::vector<Criterion>& criteria();
const Criterion& criterion(int id);

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  Exec exec = Exec::parallel;
  int documents = 200;  // round-trip sample for criterion 11
};

/// Runs criterion `id` at order k; skipped when k is outside its range.
CriterionResult check_criterion(int id, GroupOrder k, const VerifyOptions& options = {});

/// JSON round trip of `count` random documents plus rendering determinism.
CriterionResult check_round_trip(Rng& rng, int count, int k_min, int k_max);

struct VerifyReport {
  GroupOrder k;
  std::vector<CriterionResult> results;

  bool pass() const;
  /// "chambers=24 simple=16 stairs=32 taut=pass"; n/a for skipped parts.
  std::string summary() const;
};

VerifyReport verify(GroupOrder k, const VerifyOptions& options = {});

}  // namespace gcon
