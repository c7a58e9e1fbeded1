#include "qqpft/exp_sum.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qqpft {

namespace {

// the FFTW planner is not thread-safe; execution with new-array functions is
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

ComplexI cis(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace

struct ExpSum1D::Plan {
  fftw_plan handle = nullptr;

  Plan(std::size_t n, int direction) {
    std::vector<ComplexI> probe(n);
    auto* p = reinterpret_cast<fftw_complex*>(probe.data());
    std::lock_guard lock(planner_mutex());
    handle = fftw_plan_dft_1d(static_cast<int>(n), p, p, direction, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (handle == nullptr) throw std::runtime_error("ExpSum1D: FFTW planning failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(handle);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
};

ExpSum1D::ExpSum1D(UniformAxis u, UniformAxis v, int sign) : n_(u.n) {
  if (u.n == 0 || u.n != v.n) throw std::invalid_argument("ExpSum1D: axes must have equal nonzero length");
  if (sign != 1 && sign != -1) throw std::invalid_argument("ExpSum1D: sign must be +1 or -1");
  const double product = static_cast<double>(n_) * u.step * v.step;
  const double two_pi = 2.0 * std::numbers::pi;
  if (std::fabs(std::fabs(product) - two_pi) > 1e-9 * two_pi) {
    throw std::invalid_argument("ExpSum1D: axes are not reciprocal (n*du*dv = " + std::to_string(product) + ")");
  }
  const int kernel_sign = product > 0 ? sign : -sign;
  pre_.resize(n_);
  post_.resize(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    pre_[k] = cis(sign * static_cast<double>(k) * u.step * v.origin);
    post_[k] = cis(sign * u.origin * v[k]);
  }
  plan_ = std::make_unique<Plan>(n_, kernel_sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
}

ExpSum1D::~ExpSum1D() = default;
ExpSum1D::ExpSum1D(ExpSum1D&&) noexcept = default;
ExpSum1D& ExpSum1D::operator=(ExpSum1D&&) noexcept = default;

void ExpSum1D::apply(const ComplexI* in, std::ptrdiff_t in_stride, ComplexI* out, std::ptrdiff_t out_stride,
                     ComplexI* scratch) const {
  for (std::size_t k = 0; k < n_; ++k) scratch[k] = pre_[k] * in[static_cast<std::ptrdiff_t>(k) * in_stride];
  auto* buf = reinterpret_cast<fftw_complex*>(scratch);
  fftw_execute_dft(plan_->handle, buf, buf);
  for (std::size_t k = 0; k < n_; ++k) out[static_cast<std::ptrdiff_t>(k) * out_stride] = post_[k] * scratch[k];
}

std::vector<ComplexI> ExpSum1D::operator()(std::span<const ComplexI> in) const {
  if (in.size() != n_) throw std::invalid_argument("ExpSum1D: input length mismatch");
  std::vector<ComplexI> out(n_), scratch(n_);
  apply(in.data(), 1, out.data(), 1, scratch.data());
  return out;
}

std::vector<ComplexI> exp_sum_direct(std::span<const ComplexI> in, const UniformAxis& u, std::span<const double> v,
                                     int sign) {
  if (in.size() != u.n) throw std::invalid_argument("exp_sum_direct: input length mismatch");
  std::vector<ComplexI> out(v.size());
  for (std::size_t m = 0; m < v.size(); ++m) {
    ComplexI acc{};
    for (std::size_t p = 0; p < u.n; ++p) acc += cis(sign * u[p] * v[m]) * in[p];
    out[m] = acc;
  }
  return out;
}

std::vector<Quaternion> two_sided_exp_sum(std::span<const Quaternion> in, const UniformAxis& u1,
                                          const UniformAxis& v1, const UniformAxis& u2, const UniformAxis& v2,
                                          int sign) {
  const std::size_t n1 = u1.n;
  const std::size_t n2 = u2.n;
  if (in.size() != n1 * n2) throw std::invalid_argument("two_sided_exp_sum: input size mismatch");

  const ExpSum1D axis1(u1, v1, sign);
  const ExpSum1D axis2_plus(u2, v2, +1);
  const ExpSum1D axis2_minus(u2, v2, -1);

  std::vector<ComplexI> p(n1 * n2), q(n1 * n2);
  for (std::size_t k = 0; k < in.size(); ++k) {
    const auto [a, b] = symplectic_split(in[k]);
    p[k] = a;
    q[k] = b;
  }

  std::vector<Quaternion> out(n1 * n2);
  const ComplexI half{0.5, 0.0};
  const ComplexI half_over_i{0.0, -0.5};  // 1 / (2i)
  const double s = static_cast<double>(sign);

#pragma omp parallel
  {
    std::vector<ComplexI> scratch(std::max(n1, n2));
    std::vector<ComplexI> pp(n2), pm(n2), qp(n2), qm(n2);

    // the left i-exponential acts on both symplectic parts alike
#pragma omp for schedule(static)
    for (long c = 0; c < static_cast<long>(n2); ++c) {
      axis1.apply(&p[static_cast<std::size_t>(c)], static_cast<std::ptrdiff_t>(n2), &p[static_cast<std::size_t>(c)],
                  static_cast<std::ptrdiff_t>(n2), scratch.data());
      axis1.apply(&q[static_cast<std::size_t>(c)], static_cast<std::ptrdiff_t>(n2), &q[static_cast<std::size_t>(c)],
                  static_cast<std::ptrdiff_t>(n2), scratch.data());
    }

    // right j-exponential: with cos and sin of the phase written through
    // e^{+-i beta}, (P + Q j) e^{s j beta} = A + B j where
    //   A = (T+P + T-P)/2 - s (T+Q - T-Q)/(2i)
    //   B = s (T+P - T-P)/(2i) + (T+Q + T-Q)/2
#pragma omp for schedule(static)
    for (long r = 0; r < static_cast<long>(n1); ++r) {
      const std::size_t base = static_cast<std::size_t>(r) * n2;
      axis2_plus.apply(&p[base], 1, pp.data(), 1, scratch.data());
      axis2_minus.apply(&p[base], 1, pm.data(), 1, scratch.data());
      axis2_plus.apply(&q[base], 1, qp.data(), 1, scratch.data());
      axis2_minus.apply(&q[base], 1, qm.data(), 1, scratch.data());
      for (std::size_t m = 0; m < n2; ++m) {
        const ComplexI a = half * (pp[m] + pm[m]) - s * half_over_i * (qp[m] - qm[m]);
        const ComplexI b = s * half_over_i * (pp[m] - pm[m]) + half * (qp[m] + qm[m]);
        out[base + m] = symplectic_join(a, b);
      }
    }
  }
  return out;
}

}  // namespace qqpft
