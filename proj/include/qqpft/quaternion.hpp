#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace qqpft {

/// Element of span{1, i}. The same type is reused for span{1, j} when a
/// routine works in the j-plane; the imaginary part is then the j coefficient.
using ComplexI = std::complex<double>;

enum class Plane { i, j };

/// Hamilton quaternion r + x i + y j + z k.
struct Quaternion {
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : r(r_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds a complex number into the i-plane (Plane::i) or j-plane.
  static constexpr Quaternion from_complex(ComplexI c, Plane plane = Plane::i) {
    return plane == Plane::i ? Quaternion{c.real(), c.imag(), 0.0, 0.0}
                             : Quaternion{c.real(), 0.0, c.imag(), 0.0};
  }

  constexpr double scalar() const { return r; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    r += q.r; x += q.x; y += q.y; z += q.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    r -= q.r; x -= q.x; y -= q.y; z -= q.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.r, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

/// Hamilton product (non-commutative).
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.r * q.r - p.x * q.x - p.y * q.y - p.z * q.z,
          p.r * q.x + p.x * q.r + p.y * q.z - p.z * q.y,
          p.r * q.y - p.x * q.z + p.y * q.r + p.z * q.x,
          p.r * q.z + p.x * q.y - p.y * q.x + p.z * q.r};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.x, -q.y, -q.z}; }

constexpr double norm_squared(const Quaternion& q) {
  return q.r * q.r + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Largest componentwise absolute difference.
inline double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::fmax(std::fmax(std::fabs(p.r - q.r), std::fabs(p.x - q.x)),
                   std::fmax(std::fabs(p.y - q.y), std::fabs(p.z - q.z)));
}

inline Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }
inline Quaternion exp_j(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

inline Quaternion exp_unit(Plane plane, double theta) {
  return plane == Plane::i ? exp_i(theta) : exp_j(theta);
}

/// Complex coordinates of the principal square root of b*unit, unit in {i, j}:
/// sqrt|b| * e^{+pi/4} for b > 0 and sqrt|b| * e^{-pi/4} for b < 0.
/// Throws std::domain_error for b == 0.
ComplexI sqrt_unit_complex(double b);

/// sqrt_unit_complex embedded in the requested plane.
Quaternion sqrt_unit(double b, Plane axis);

/// q = p + s j with p = r + x i and s = y + z i.
constexpr std::pair<ComplexI, ComplexI> symplectic_split(const Quaternion& q) {
  return {ComplexI{q.r, q.x}, ComplexI{q.y, q.z}};
}

constexpr Quaternion symplectic_join(ComplexI p, ComplexI s) {
  return {p.real(), p.imag(), s.real(), s.imag()};
}

/// q = u + i v with u, v in span{1, j}; the complex numbers hold the
/// (1, j) coordinates. Used when a j-plane factor multiplies from the right.
constexpr std::pair<ComplexI, ComplexI> j_split(const Quaternion& q) {
  return {ComplexI{q.r, q.y}, ComplexI{q.x, q.z}};
}

constexpr Quaternion j_join(ComplexI u, ComplexI v) {
  return {u.real(), v.real(), u.imag(), v.imag()};
}

}  // namespace qqpft
