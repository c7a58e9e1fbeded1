#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qqpft/quaternion.hpp"

namespace qqpft {

/// Sample coordinates origin + k * step, k = 0..n-1. step may be negative
/// for internal frequency maps; public grids always use step > 0.
struct UniformAxis {
  std::size_t n = 0;
  double origin = 0.0;
  double step = 1.0;

  double operator[](std::size_t k) const { return origin + static_cast<double>(k) * step; }
  std::vector<double> coordinates() const;
};

/// Uniform 2D sampling lattice. Both counts are even and >= 2, spacings > 0.
class Grid2D {
 public:
  Grid2D(std::size_t n1, std::size_t n2, double dx1, double dx2, double x1_0, double x2_0);

  /// Grid with n_s samples spanning extent_s per axis and x_s0 = -n_s*dx_s/2,
  /// so that the origin is a sample.
  static Grid2D centered(std::size_t n1, std::size_t n2, double extent1, double extent2);
  static Grid2D centered(std::size_t n, double extent) { return centered(n, n, extent, extent); }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t size() const { return n1_ * n2_; }
  double dx1() const { return dx1_; }
  double dx2() const { return dx2_; }
  double x1_0() const { return x1_0_; }
  double x2_0() const { return x2_0_; }
  double cell_area() const { return dx1_ * dx2_; }

  double x1(std::size_t i1) const { return x1_0_ + static_cast<double>(i1) * dx1_; }
  double x2(std::size_t i2) const { return x2_0_ + static_cast<double>(i2) * dx2_; }
  std::size_t index(std::size_t i1, std::size_t i2) const { return i1 * n2_ + i2; }

  /// axis is 1 or 2.
  UniformAxis axis(int axis) const;

  bool is_centered() const;

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  std::size_t n1_;
  std::size_t n2_;
  double dx1_;
  double dx2_;
  double x1_0_;
  double x2_0_;
};

std::string describe(const Grid2D& grid);

/// Quaternion samples on a Grid2D, row-major (index i1 * n2 + i2).
/// Integrals over a signal are Riemann sums with weight dx1 * dx2.
class QSignal2D {
 public:
  explicit QSignal2D(Grid2D grid);
  QSignal2D(Grid2D grid, std::vector<Quaternion> samples);

  const Grid2D& grid() const { return grid_; }
  std::span<const Quaternion> samples() const { return samples_; }
  const Quaternion& operator()(std::size_t i1, std::size_t i2) const { return samples_[grid_.index(i1, i2)]; }
  const Quaternion& operator[](std::size_t k) const { return samples_[k]; }
  std::size_t size() const { return samples_.size(); }

  /// Releases the sample storage, for pipelines that transform in place.
  std::vector<Quaternion> take_samples() && { return std::move(samples_); }

 private:
  Grid2D grid_;
  std::vector<Quaternion> samples_;
};

/// Boolean set on a grid; measure = (count of true bits) * dx1 * dx2.
class GridMask {
 public:
  GridMask(Grid2D grid, std::vector<std::uint8_t> bits);

  static GridMask full(const Grid2D& grid);
  static GridMask empty(const Grid2D& grid);
  /// Samples with x1^2 + x2^2 <= radius^2.
  static GridMask disk(const Grid2D& grid, double radius);

  const Grid2D& grid() const { return grid_; }
  bool operator()(std::size_t i1, std::size_t i2) const { return bits_[grid_.index(i1, i2)] != 0; }
  bool operator[](std::size_t k) const { return bits_[k] != 0; }
  std::size_t count() const;
  double measure() const { return static_cast<double>(count()) * grid_.cell_area(); }

 private:
  Grid2D grid_;
  std::vector<std::uint8_t> bits_;
};

/// One-dimensional quaternion signal on a uniform axis (n even, step > 0).
class QSignal1D {
 public:
  QSignal1D(UniformAxis axis, std::vector<Quaternion> samples);

  static UniformAxis centered_axis(std::size_t n, double extent);

  const UniformAxis& axis() const { return axis_; }
  std::span<const Quaternion> samples() const { return samples_; }
  const Quaternion& operator[](std::size_t k) const { return samples_[k]; }
  std::size_t size() const { return samples_.size(); }

 private:
  UniformAxis axis_;
  std::vector<Quaternion> samples_;
};

// ---------------------------------------------------------------------------
// Quadrature functionals

/// Sum of f * conj(g) * dx1 * dx2. Throws std::invalid_argument on grid mismatch.
Quaternion inner_product(const QSignal2D& f, const QSignal2D& g);

/// Scalar part of inner_product.
double scalar_inner(const QSignal2D& f, const QSignal2D& g);

/// (sum |f|^p dx1 dx2)^(1/p); p = infinity gives max |f|. Throws for p < 1.
double lp_norm(const QSignal2D& f, double p);
double l2_norm(const QSignal2D& f);

/// Energy sum |f|^2 dx1 dx2.
double energy(const QSignal2D& f);

enum class MomentKind { axis_spread, radial, log_radial };

/// axis_spread: sum x_s^2 |f|^2;  radial: sum |x|^2 |f|^2;
/// log_radial: sum ln|x| |f|^2 over x != 0, plus a lattice correction
/// |f(0)|^2 dx1 dx2 (ln h - ln(Gamma(1/4)^2 / (2 sqrt(pi)))) for the singular
/// origin cell when x = 0 is a sample (square cells; rectangular cells use
/// the general Dedekind-eta form). Error O(h^4 ln h) instead of O(h^2 ln h).
/// `axis` (1 or 2) is only read for axis_spread.
double moment(const QSignal2D& f, MomentKind kind, int axis = 1);

/// (energy of f outside E)^(1/2) / ||f||_2. Throws for a zero signal.
double concentration_epsilon(const QSignal2D& f, const GridMask& mask);

enum class Side { left, right };

/// Multiplies every sample by exp_plane(c2 u^2 + c1 u + c0) on the given
/// side, u being x1 for Plane::i and x2 for Plane::j.
QSignal2D chirp_multiply(const QSignal2D& f, Side side, Plane axis, double c2, double c1, double c0);

/// Pointwise sum alpha * f + beta * g with real scalars.
QSignal2D linear_combination(double alpha, const QSignal2D& f, double beta, const QSignal2D& g);

/// Pointwise left and right multiplication by constant quaternions.
QSignal2D multiply(const Quaternion& left, const QSignal2D& f, const Quaternion& right);

/// Largest componentwise difference between samples; grids must match.
double max_abs_diff(const QSignal2D& f, const QSignal2D& g);
double max_abs(const QSignal2D& f);

/// Shifts content by (s1, s2) samples: out(i) = f(i - s). Vacated samples are zero.
QSignal2D shift_samples(const QSignal2D& f, long s1, long s2);

// ---------------------------------------------------------------------------
// Test-signal descriptors

/// exp(-(k1 x1^2 + k2 x2^2)).
struct GaussianSpec {
  double k1 = 0.5;
  double k2 = 0.5;
};

/// exp(i a1 x1^2) * exp(-(k1 x1^2 + k2 x2^2)) * exp(j a2 x2^2).
struct ChirpedGaussianSpec {
  double k1 = 0.5;
  double k2 = 0.5;
  double a1 = 1.0;
  double a2 = 1.0;
};

/// Quaternion `value` on |x1| <= h1, |x2| <= h2, zero elsewhere.
struct BoxSpec {
  double h1 = 1.0;
  double h2 = 1.0;
  Quaternion value{1.0};
};

/// Seeded sum of modulated Gaussian bumps with random quaternion amplitudes,
/// placed and sized relative to the grid so that samples at the boundary
/// are negligible and the spectrum stays well inside the Nyquist band.
struct RandomSmoothSpec {
  std::uint64_t seed = 0;
  int bumps = 4;
};

using SignalSpec = std::variant<GaussianSpec, ChirpedGaussianSpec, BoxSpec, RandomSmoothSpec>;

QSignal2D sample_function(const Grid2D& grid, const SignalSpec& spec);

/// Parses "gaussian:k1,k2", "chirped:k1,k2,a1,a2", "box:h1,h2" or
/// "random:seed". Throws std::invalid_argument for anything else.
SignalSpec parse_signal_spec(const std::string& text);

}  // namespace qqpft
