#pragma once

#include <span>
#include <string>
#include <vector>

#include "qqpft/report.hpp"
#include "qqpft/signal.hpp"

namespace qqpft {

/// Quadratic-phase parameters (a, b, c, d, e) of the kernel
///   sqrt(b unit / 2 pi) * exp(-unit (a x^2 + b x w + c w^2 + d x + e w)).
/// b != 0 is enforced at construction.
class QPFTParams {
 public:
  QPFTParams(double a, double b, double c, double d, double e);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double e() const { return e_; }

  double phase(double x, double w) const { return a_ * x * x + b_ * x * w + c_ * w * w + d_ * x + e_ * w; }

  /// sqrt_unit(b) / sqrt(2 pi) in complex coordinates of the kernel plane.
  ComplexI constant() const;

  /// Kernel value as a complex number in its own plane.
  ComplexI kernel(double x, double w) const;

  std::string to_string() const;

  friend bool operator==(const QPFTParams&, const QPFTParams&) = default;

 private:
  double a_, b_, c_, d_, e_;
};

enum class Method { direct, fast };
enum class Direction { forward, inverse };

/// Frequency axis induced by a space axis: step 2 pi / (n dx |b|), centered,
/// ascending. The fast paths produce their output on this axis.
UniformAxis induced_frequency_axis(const UniformAxis& space, const QPFTParams& mu);

/// A one-axis quadratic-phase kernel and the side of the signal it multiplies.
/// forward: out(w) = sum_x K(x, w) . f(x) dx  (K on `side`),
/// inverse: out(x) = sum_w conj(K(x, w)) . F(w) dw.
/// `conjugate` swaps K for its conjugate in either direction.
struct AxisKernel {
  QPFTParams mu;
  Plane plane = Plane::i;
  Side side = Side::left;
  bool conjugate = false;
};

/// Applies an AxisKernel along `axis` (1 or 2) of an n1 x n2 row-major array
/// whose transformed axis is sampled on `in`, by direct quadrature at the
/// given output coordinates. O(n_in * n_out) per line; parallel over lines.
std::vector<Quaternion> transform_axis_direct(std::span<const Quaternion> data, std::size_t n1, std::size_t n2,
                                              int axis, const AxisKernel& kernel, Direction direction,
                                              const UniformAxis& in, std::span<const double> out);

/// Same as transform_axis_direct on the reciprocal output axis (`out` must be
/// the induced frequency axis of `in` for forward, or vice versa), via
/// chirp multiplication and one FFT per line.
std::vector<Quaternion> transform_axis_fast(std::span<const Quaternion> data, std::size_t n1, std::size_t n2,
                                            int axis, const AxisKernel& kernel, Direction direction,
                                            const UniformAxis& in, const UniformAxis& out);

/// 1D quadratic-phase transform, kernel multiplied on the right in the i-plane,
/// evaluated on induced_frequency_axis(f.axis(), mu).
QSignal1D qpft1d_forward(const QSignal1D& f, const QPFTParams& mu, Method method = Method::fast);

/// Direct evaluation at arbitrary frequencies.
std::vector<Quaternion> qpft1d_forward_at(const QSignal1D& f, const QPFTParams& mu, std::span<const double> freqs);

/// Inverse quadrature sum_w F(w) conj(K(x, w)) dw onto `space`. The spectrum
/// must live on induced_frequency_axis(space, mu).
QSignal1D qpft1d_inverse(const QSignal1D& spectrum, const QPFTParams& mu, const UniformAxis& space,
                         Method method = Method::direct);

/// Left-sided transform along x1: sum_x1 K^i(x1, w1) f(x1, x2) dx1, over (w1, x2).
QSignal2D qpft_left2d(const QSignal2D& f, const QPFTParams& mu1, Method method = Method::fast);

/// Right-sided transform along x2: sum_x2 f(x1, x2) K^j(x2, w2) dx2, over (x1, w2).
QSignal2D qpft_right2d(const QSignal2D& f, const QPFTParams& mu2, Method method = Method::fast);

/// Inner-product and norm preservation of qpft_right2d, both relative to
/// max(||f||^2, ||g||^2); passes when both are below 1e-9.
VerificationReport right_sided_parseval_check(const QSignal2D& f, const QSignal2D& g, const QPFTParams& mu2);

}  // namespace qqpft
