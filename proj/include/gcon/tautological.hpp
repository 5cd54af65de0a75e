#pragma once

#include <optional>
#include <vector>

#include "gcon/chambers.hpp"
#include "gcon/exec.hpp"
#include "gcon/stairs.hpp"

namespace gcon {

/// The monomial ideal K generated by the generator boxes of a realized
/// chamber stair, x^{a_1}y^{b_1}, ..., x^{a_s}y^{b_s} with a increasing and b
/// decreasing.
struct ChamberIdeal {
  GroupOrder k;
  std::vector<Monomial> generators;

  friend bool operator==(const ChamberIdeal&, const ChamberIdeal&) = default;
};

ChamberIdeal ideal_generators(const Chamber& chamber);

bool monomial_in_ideal(const ChamberIdeal& ideal, Monomial m);

/// On chart j (coordinates a_j = x^j y^(j-k), c_j = x^(1-j) y^(k-j+1)) a
/// monomial of K dies in the fiber at the chart origin when it is a multiple
/// of a_j, of c_j or of a_j c_j = xy inside K:
///   A  : m * x^-j y^(k-j)     in K
///   C  : m * x^(j-1) y^-(k-j+1) in K
///   XY : m / (xy)             in K
enum class KillRule { killed_a, killed_c, killed_xy, survives };
const char* to_string(KillRule rule) noexcept;

bool holds_a(const ChamberIdeal& ideal, int j, Monomial m);
bool holds_c(const ChamberIdeal& ideal, int j, Monomial m);

/// Reports the first rule that applies, in the order A, C, XY.
KillRule kill_test(const ChamberIdeal& ideal, int j, Monomial m);

struct TautFiber {
  int j = 0;
  std::vector<Monomial> survivors;  // sorted along the stair
  RealizedStair as_stair;
};

/// Monomials scanned are x^a y^b with a <= a_s + margin, b <= b_1 + margin;
/// the default margin is 2k.
std::vector<Monomial> fiber_survivors(const ChamberIdeal& ideal, int j,
                                      std::optional<int> margin = std::nullopt);

/// Throws ErrorCode::internal when the survivors are not k boxes forming a
/// stair of width j.
TautFiber fiber_at_chart(const Chamber& chamber, int j);

struct ChartCheck {
  int j = 0;
  bool pass = false;
  std::vector<Monomial> survivors;
  Stair expected;
  std::optional<Stair> found;

  friend bool operator==(const ChartCheck&, const ChartCheck&) = default;
};

struct FiberReport {
  GroupOrder k;
  Irrep first_rep;
  std::vector<int> offsets;
  std::vector<ChartCheck> charts;
  bool pass = false;

  friend bool operator==(const FiberReport&, const FiberReport&) = default;
};

/// Compares the fiber at every chart origin with the chamber's stair of the
/// same width.
FiberReport verify_tautological(const Chamber& chamber);

std::vector<FiberReport> verify_tautological_all(const std::vector<Chamber>& chambers,
                                                 Exec exec = Exec::parallel);

/// Bases of (x^a1 y^b1) / (x^a1 y^(b1+k), x^(a1+1) y^b1) and of
/// (x^as y^bs) / (x^(as+k) y^bs, x^as y^(bs+1)): the expected fibers at the
/// first and the last chart.
std::vector<Monomial> first_chart_basis(const ChamberIdeal& ideal);
std::vector<Monomial> last_chart_basis(const ChamberIdeal& ideal);

}  // namespace gcon
