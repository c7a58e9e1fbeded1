#include "qqpft/quaternion.hpp"

#include <numbers>
#include <stdexcept>

namespace qqpft {

ComplexI sqrt_unit_complex(double b) {
  if (b == 0.0) throw std::domain_error("sqrt_unit: b must be nonzero");
  // principal root of b*unit; the argument is +pi/4 or -pi/4
  const double m = std::sqrt(std::fabs(b)) * std::numbers::sqrt2 / 2.0;
  return b > 0.0 ? ComplexI{m, m} : ComplexI{m, -m};
}

Quaternion sqrt_unit(double b, Plane axis) {
  return Quaternion::from_complex(sqrt_unit_complex(b), axis);
}

}  // namespace qqpft
