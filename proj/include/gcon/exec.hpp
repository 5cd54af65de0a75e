#pragma once

namespace gcon {

/// Selects between the OpenMP kernels and the plain serial loops they were
/// derived from. Both produce identical, canonically ordered results.
enum class Exec { serial, parallel };

}  // namespace gcon
