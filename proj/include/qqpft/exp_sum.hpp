#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "qqpft/quaternion.hpp"
#include "qqpft/signal.hpp"

namespace qqpft {

/// Fast evaluation of the reciprocal-grid exponential sum
///
///   out[m] = sum_p exp(sign * I * u[p] * v[m]) * in[p]
///
/// for uniform axes u, v of equal length n with |n * du * dv| = 2 pi
/// (I is the imaginary unit of whatever plane the caller works in).
/// The sum factors into a pre-twiddle, one length-n FFT and a post-twiddle.
/// Instances are immutable and may be shared between threads.
class ExpSum1D {
 public:
  ExpSum1D(UniformAxis u, UniformAxis v, int sign);
  ~ExpSum1D();
  ExpSum1D(const ExpSum1D&) = delete;
  ExpSum1D& operator=(const ExpSum1D&) = delete;
  ExpSum1D(ExpSum1D&&) noexcept;
  ExpSum1D& operator=(ExpSum1D&&) noexcept;

  std::size_t size() const { return n_; }

  /// Strided input and output; `scratch` must hold size() elements.
  void apply(const ComplexI* in, std::ptrdiff_t in_stride, ComplexI* out, std::ptrdiff_t out_stride,
             ComplexI* scratch) const;

  std::vector<ComplexI> operator()(std::span<const ComplexI> in) const;

 private:
  struct Plan;
  std::size_t n_ = 0;
  std::vector<ComplexI> pre_;
  std::vector<ComplexI> post_;
  std::unique_ptr<Plan> plan_;
};

/// Same sum by direct O(n^2) evaluation; used as an oracle for ExpSum1D.
std::vector<ComplexI> exp_sum_direct(std::span<const ComplexI> in, const UniformAxis& u, std::span<const double> v,
                                     int sign);

/// Two-sided quaternion exponential sum on an n1 x n2 row-major array:
///
///   out(m1, m2) = sum_p exp(sign i u1[p1] v1[m1]) * in(p1, p2) * exp(sign j u2[p2] v2[m2])
///
/// evaluated through the symplectic split in = P + Q j with complex FFTs.
/// Axis pairs must satisfy the ExpSum1D reciprocity condition.
std::vector<Quaternion> two_sided_exp_sum(std::span<const Quaternion> in, const UniformAxis& u1,
                                          const UniformAxis& v1, const UniformAxis& u2, const UniformAxis& v2,
                                          int sign);

}  // namespace qqpft
