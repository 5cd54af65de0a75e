#pragma once

#include "gcon/error.hpp"
#include "gcon/rational.hpp"
#include "gcon/stability.hpp"

namespace gcon::test {

/// Code of the gcon::Error thrown by f, or internal when nothing is thrown.
template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

inline StabilityCondition theta(int k, std::initializer_list<long long> v) {
  return make_theta(GroupOrder(k), std::vector<long long>(v));
}

}  // namespace gcon::test
