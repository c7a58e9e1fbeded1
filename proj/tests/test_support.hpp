#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "qqpft/quaternion.hpp"

namespace qqpft {

inline void PrintTo(const Quaternion& q, std::ostream* os) {
  *os << "(" << q.r << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace qqpft

namespace qqpft::testing {

inline Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace qqpft::testing
