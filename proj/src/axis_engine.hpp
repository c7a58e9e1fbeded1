#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qqpft/qpft1d.hpp"

namespace qqpft::detail {

/// A complex linear map applied to one strided line of samples.
class LineOp {
 public:
  virtual ~LineOp() = default;
  virtual std::size_t out_size() const = 0;
  virtual std::size_t scratch_size() const = 0;
  virtual void apply(const ComplexI* in, std::ptrdiff_t in_stride, ComplexI* out, std::ptrdiff_t out_stride,
                     ComplexI* scratch) const = 0;
};

/// sigma = -1 applies the kernel, +1 its conjugate.
std::unique_ptr<LineOp> make_direct_line(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in,
                                         std::span<const double> out);
std::unique_ptr<LineOp> make_fast_line(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in,
                                       const UniformAxis& out);

/// Kernel signs for the two complex parts of the plane split.
std::pair<int, int> component_signs(const AxisKernel& kernel, Direction direction);

std::vector<Quaternion> apply_axis(std::span<const Quaternion> data, std::size_t n1, std::size_t n2, int axis,
                                   Plane plane, const LineOp& first, const LineOp& second);

}  // namespace qqpft::detail
