#include "qqpft/qpft1d.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "axis_engine.hpp"
#include "qqpft/exp_sum.hpp"

namespace qqpft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexI cis(double theta) { return {std::cos(theta), std::sin(theta)}; }

bool same_axis(const UniformAxis& a, const UniformAxis& b) {
  return a.n == b.n && a.origin == b.origin && a.step == b.step;
}

}  // namespace

QPFTParams::QPFTParams(double a, double b, double c, double d, double e) : a_(a), b_(b), c_(c), d_(d), e_(e) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d) || !std::isfinite(e)) {
    throw std::invalid_argument("QPFTParams: parameters must be finite");
  }
  if (b == 0.0) throw std::invalid_argument("QPFTParams: b must be nonzero");
}

ComplexI QPFTParams::constant() const { return sqrt_unit_complex(b_) / std::sqrt(kTwoPi); }

ComplexI QPFTParams::kernel(double x, double w) const { return constant() * cis(-phase(x, w)); }

std::string QPFTParams::to_string() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g, %.17g)", a_, b_, c_, d_, e_);
  return buf;
}

UniformAxis induced_frequency_axis(const UniformAxis& space, const QPFTParams& mu) {
  const double step = kTwoPi / (static_cast<double>(space.n) * space.step * std::fabs(mu.b()));
  return {space.n, -static_cast<double>(space.n / 2) * step, step};
}

namespace detail {

namespace {

class DirectLine final : public LineOp {
 public:
  DirectLine(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in, std::span<const double> out)
      : n_in_(in.n), n_out_(out.size()), matrix_(n_in_ * n_out_) {
    const ComplexI c = sigma < 0 ? mu.constant() : std::conj(mu.constant());
    const double weight = std::fabs(in.step);
    for (std::size_t o = 0; o < n_out_; ++o) {
      for (std::size_t p = 0; p < n_in_; ++p) {
        const double phi = dir == Direction::forward ? mu.phase(in[p], out[o]) : mu.phase(out[o], in[p]);
        matrix_[o * n_in_ + p] = c * cis(sigma * phi) * weight;
      }
    }
  }

  std::size_t out_size() const override { return n_out_; }
  std::size_t scratch_size() const override { return 0; }

  void apply(const ComplexI* in, std::ptrdiff_t in_stride, ComplexI* out, std::ptrdiff_t out_stride,
             ComplexI*) const override {
    for (std::size_t o = 0; o < n_out_; ++o) {
      const ComplexI* row = &matrix_[o * n_in_];
      ComplexI acc{};
      for (std::size_t p = 0; p < n_in_; ++p) acc += row[p] * in[static_cast<std::ptrdiff_t>(p) * in_stride];
      out[static_cast<std::ptrdiff_t>(o) * out_stride] = acc;
    }
  }

 private:
  std::size_t n_in_;
  std::size_t n_out_;
  std::vector<ComplexI> matrix_;
};

// forward:  out(w) = C e^{s i (c w^2 + e w)} sum_x e^{s i x (b w)} [e^{s i (a x^2 + d x)} g(x)] dx
// inverse:  out(x) = C e^{s i (a x^2 + d x)} sum_w e^{s i (b w) x} [e^{s i (c w^2 + e w)} g(w)] dw
class FastLine final : public LineOp {
 public:
  FastLine(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in, const UniformAxis& out)
      : n_(in.n), pre_(n_), post_(n_) {
    if (out.n != in.n) throw std::invalid_argument("transform_axis_fast: input and output lengths differ");
    const ComplexI c = sigma < 0 ? mu.constant() : std::conj(mu.constant());
    const double weight = std::fabs(in.step);
    const auto space_chirp = [&](double x) { return mu.a() * x * x + mu.d() * x; };
    const auto freq_chirp = [&](double w) { return mu.c() * w * w + mu.e() * w; };
    const double b = mu.b();
    if (dir == Direction::forward) {
      for (std::size_t k = 0; k < n_; ++k) {
        pre_[k] = cis(sigma * space_chirp(in[k])) * weight;
        post_[k] = c * cis(sigma * freq_chirp(out[k]));
      }
      sum_ = std::make_unique<ExpSum1D>(in, UniformAxis{n_, b * out.origin, b * out.step}, sigma);
    } else {
      for (std::size_t k = 0; k < n_; ++k) {
        pre_[k] = cis(sigma * freq_chirp(in[k])) * weight;
        post_[k] = c * cis(sigma * space_chirp(out[k]));
      }
      sum_ = std::make_unique<ExpSum1D>(UniformAxis{n_, b * in.origin, b * in.step}, out, sigma);
    }
  }

  std::size_t out_size() const override { return n_; }
  std::size_t scratch_size() const override { return 2 * n_; }

  void apply(const ComplexI* in, std::ptrdiff_t in_stride, ComplexI* out, std::ptrdiff_t out_stride,
             ComplexI* scratch) const override {
    ComplexI* line = scratch + n_;
    for (std::size_t k = 0; k < n_; ++k) line[k] = pre_[k] * in[static_cast<std::ptrdiff_t>(k) * in_stride];
    sum_->apply(line, 1, line, 1, scratch);
    for (std::size_t k = 0; k < n_; ++k) out[static_cast<std::ptrdiff_t>(k) * out_stride] = post_[k] * line[k];
  }

 private:
  std::size_t n_;
  std::vector<ComplexI> pre_;
  std::vector<ComplexI> post_;
  std::unique_ptr<ExpSum1D> sum_;
};

}  // namespace

std::unique_ptr<LineOp> make_direct_line(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in,
                                         std::span<const double> out) {
  return std::make_unique<DirectLine>(mu, sigma, dir, in, out);
}

std::unique_ptr<LineOp> make_fast_line(const QPFTParams& mu, int sigma, Direction dir, const UniformAxis& in,
                                       const UniformAxis& out) {
  return std::make_unique<FastLine>(mu, sigma, dir, in, out);
}

// Plane i splits q = P + Q j, plane j splits q = U + i V. The second part sees
// the conjugate kernel when the kernel has to be moved past j (resp. i):
// i-plane kernel on the right, j-plane kernel on the left.
std::vector<Quaternion> apply_axis(std::span<const Quaternion> data, std::size_t n1, std::size_t n2, int axis,
                                   Plane plane, const LineOp& first, const LineOp& second) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
  if (data.size() != n1 * n2) throw std::invalid_argument("transform_axis: data size does not match n1 * n2");

  const std::size_t n_out = first.out_size();
  const std::size_t out1 = axis == 1 ? n_out : n1;
  const std::size_t out2 = axis == 1 ? n2 : n_out;
  const std::size_t lines = axis == 1 ? n2 : n1;
  const auto in_stride = static_cast<std::ptrdiff_t>(axis == 1 ? n2 : 1);
  const auto out_stride = static_cast<std::ptrdiff_t>(axis == 1 ? out2 : 1);

  std::vector<ComplexI> a(data.size()), b(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto [u, v] = plane == Plane::i ? symplectic_split(data[k]) : j_split(data[k]);
    a[k] = u;
    b[k] = v;
  }

  std::vector<ComplexI> ra(out1 * out2), rb(out1 * out2);
#pragma omp parallel
  {
    std::vector<ComplexI> scratch(std::max(first.scratch_size(), second.scratch_size()) + 1);
#pragma omp for schedule(static)
    for (long l = 0; l < static_cast<long>(lines); ++l) {
      const auto line = static_cast<std::size_t>(l);
      const std::size_t in_off = axis == 1 ? line : line * n2;
      const std::size_t out_off = axis == 1 ? line : line * out2;
      first.apply(&a[in_off], in_stride, &ra[out_off], out_stride, scratch.data());
      second.apply(&b[in_off], in_stride, &rb[out_off], out_stride, scratch.data());
    }
  }

  std::vector<Quaternion> out(out1 * out2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = plane == Plane::i ? symplectic_join(ra[k], rb[k]) : j_join(ra[k], rb[k]);
  }
  return out;
}

std::pair<int, int> component_signs(const AxisKernel& kernel, Direction direction) {
  // effective kernel: K for sigma = -1, conj(K) for sigma = +1
  const bool conj_first = (direction == Direction::inverse) != kernel.conjugate;
  const bool conj_second_extra =
      (kernel.plane == Plane::i && kernel.side == Side::right) || (kernel.plane == Plane::j && kernel.side == Side::left);
  const bool conj_second = conj_first != conj_second_extra;
  return {conj_first ? +1 : -1, conj_second ? +1 : -1};
}

}  // namespace detail

std::vector<Quaternion> transform_axis_direct(std::span<const Quaternion> data, std::size_t n1, std::size_t n2,
                                              int axis, const AxisKernel& kernel, Direction direction,
                                              const UniformAxis& in, std::span<const double> out) {
  if (in.n != (axis == 1 ? n1 : n2)) throw std::invalid_argument("transform_axis_direct: axis length mismatch");
  const auto [s1, s2] = detail::component_signs(kernel, direction);
  const auto first = detail::make_direct_line(kernel.mu, s1, direction, in, out);
  const auto second = detail::make_direct_line(kernel.mu, s2, direction, in, out);
  return detail::apply_axis(data, n1, n2, axis, kernel.plane, *first, *second);
}

std::vector<Quaternion> transform_axis_fast(std::span<const Quaternion> data, std::size_t n1, std::size_t n2,
                                            int axis, const AxisKernel& kernel, Direction direction,
                                            const UniformAxis& in, const UniformAxis& out) {
  if (in.n != (axis == 1 ? n1 : n2)) throw std::invalid_argument("transform_axis_fast: axis length mismatch");
  const auto [s1, s2] = detail::component_signs(kernel, direction);
  const auto first = detail::make_fast_line(kernel.mu, s1, direction, in, out);
  const auto second = detail::make_fast_line(kernel.mu, s2, direction, in, out);
  return detail::apply_axis(data, n1, n2, axis, kernel.plane, *first, *second);
}

namespace {

std::vector<Quaternion> run_axis(std::span<const Quaternion> data, std::size_t n1, std::size_t n2, int axis,
                                 const AxisKernel& kernel, Direction direction, const UniformAxis& in,
                                 const UniformAxis& out, Method method) {
  if (method == Method::fast) return transform_axis_fast(data, n1, n2, axis, kernel, direction, in, out);
  const auto coords = out.coordinates();
  return transform_axis_direct(data, n1, n2, axis, kernel, direction, in, coords);
}

}  // namespace

QSignal1D qpft1d_forward(const QSignal1D& f, const QPFTParams& mu, Method method) {
  const UniformAxis w = induced_frequency_axis(f.axis(), mu);
  const AxisKernel k{mu, Plane::i, Side::right, false};
  return {w, run_axis(f.samples(), f.size(), 1, 1, k, Direction::forward, f.axis(), w, method)};
}

std::vector<Quaternion> qpft1d_forward_at(const QSignal1D& f, const QPFTParams& mu, std::span<const double> freqs) {
  const AxisKernel k{mu, Plane::i, Side::right, false};
  return transform_axis_direct(f.samples(), f.size(), 1, 1, k, Direction::forward, f.axis(), freqs);
}

QSignal1D qpft1d_inverse(const QSignal1D& spectrum, const QPFTParams& mu, const UniformAxis& space, Method method) {
  if (!same_axis(spectrum.axis(), induced_frequency_axis(space, mu))) {
    throw std::invalid_argument("qpft1d_inverse: spectrum axis is not the induced frequency axis of the space axis");
  }
  const AxisKernel k{mu, Plane::i, Side::right, false};
  return {space, run_axis(spectrum.samples(), spectrum.size(), 1, 1, k, Direction::inverse, spectrum.axis(), space,
                          method)};
}

QSignal2D qpft_left2d(const QSignal2D& f, const QPFTParams& mu1, Method method) {
  const Grid2D& g = f.grid();
  const UniformAxis x1 = g.axis(1);
  const UniformAxis w1 = induced_frequency_axis(x1, mu1);
  const AxisKernel k{mu1, Plane::i, Side::left, false};
  auto out = run_axis(f.samples(), g.n1(), g.n2(), 1, k, Direction::forward, x1, w1, method);
  return {Grid2D(g.n1(), g.n2(), w1.step, g.dx2(), w1.origin, g.x2_0()), std::move(out)};
}

QSignal2D qpft_right2d(const QSignal2D& f, const QPFTParams& mu2, Method method) {
  const Grid2D& g = f.grid();
  const UniformAxis x2 = g.axis(2);
  const UniformAxis w2 = induced_frequency_axis(x2, mu2);
  const AxisKernel k{mu2, Plane::j, Side::right, false};
  auto out = run_axis(f.samples(), g.n1(), g.n2(), 2, k, Direction::forward, x2, w2, method);
  return {Grid2D(g.n1(), g.n2(), g.dx1(), w2.step, g.x1_0(), w2.origin), std::move(out)};
}

VerificationReport right_sided_parseval_check(const QSignal2D& f, const QSignal2D& g, const QPFTParams& mu2) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("right_sided_parseval_check: grids differ");
  const QSignal2D tf = qpft_right2d(f, mu2);
  const QSignal2D tg = qpft_right2d(g, mu2);
  const double ef = energy(f);
  const double scale = std::fmax(std::fmax(ef, energy(g)), 1e-300);
  const double inner_err = std::fabs(scalar_inner(f, g) - scalar_inner(tf, tg)) / scale;
  const double norm_err = std::fabs(ef - energy(tf)) / scale;
  auto r = VerificationReport::make("right_sided_parseval", std::fmax(inner_err, norm_err), 1e-9, describe(f.grid()),
                                    mu2.to_string());
  r.details["inner_product_rel_error"] = inner_err;
  r.details["norm_rel_error"] = norm_err;
  return r;
}

}  // namespace qqpft
