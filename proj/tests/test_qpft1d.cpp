#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qqpft/qpft1d.hpp"
#include "test_support.hpp"

using namespace qqpft;

namespace {

constexpr double kPi = std::numbers::pi;

QSignal1D sample_1d(std::size_t n, double extent, auto fn) {
  const UniformAxis axis = QSignal1D::centered_axis(n, extent);
  std::vector<Quaternion> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = fn(axis[k]);
  return {axis, s};
}

QSignal1D random_1d(std::size_t n, double extent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Quaternion a = qqpft::testing::random_quaternion(rng), b = qqpft::testing::random_quaternion(rng);
  return sample_1d(n, extent, [&](double x) {
    return a * std::exp(-(x - 0.5) * (x - 0.5)) + exp_i(0.8 * x) * b * std::exp(-0.7 * (x + 1) * (x + 1));
  });
}

// integral of e^{-k x^2} against the kernel, in the kernel plane
ComplexI gaussian_1d(const QPFTParams& mu, double k, double w) {
  const std::complex<double> z{k, mu.a()};
  const double s = mu.b() * w + mu.d();
  return mu.constant() * std::sqrt(kPi / z) * std::exp(-s * s / (4.0 * z)) *
         std::polar(1.0, -(mu.c() * w * w + mu.e() * w));
}

double max_diff(std::span<const Quaternion> a, std::span<const Quaternion> b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, max_abs_diff(a[k], b[k]));
  return m;
}

const Quaternion I = Quaternion::unit_i();
const Quaternion J = Quaternion::unit_j();

}  // namespace

TEST(QPFTParams, RejectsZeroB) {
  EXPECT_THROW(QPFTParams(0, 0, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(QPFTParams(NAN, 1, 0, 0, 0), std::invalid_argument);
}

TEST(QPFTParams, KernelModulus) {
  const QPFTParams mu(0.3, -2.0, 1.1, 0.4, -0.6);
  for (double x : {-3.0, 0.0, 1.7})
    for (double w : {-1.0, 0.2, 5.0}) EXPECT_NEAR(std::abs(mu.kernel(x, w)), std::sqrt(2.0 / (2 * kPi)), 1e-15);
}

TEST(InducedAxis, ScalesByB) {
  const UniformAxis x = QSignal1D::centered_axis(16, 8.0);
  const UniformAxis w = induced_frequency_axis(x, QPFTParams(0, -2, 0, 0, 0));
  EXPECT_DOUBLE_EQ(w.step, 2 * kPi / (16 * 0.5 * 2));
  EXPECT_DOUBLE_EQ(w[8], 0.0);
}

TEST(Qpft1d, GaussianPlainKernel) {
  const QSignal1D f = sample_1d(256, 20.0, [](double x) { return Quaternion{std::exp(-x * x / 2)}; });
  const QPFTParams mu(0, 1, 0, 0, 0);
  const Quaternion root_i = sqrt_unit(1.0, Plane::i);
  for (Method m : {Method::direct, Method::fast}) {
    const QSignal1D F = qpft1d_forward(f, mu, m);
    double err = 0.0;
    for (std::size_t k = 0; k < F.size(); ++k) {
      const double w = F.axis()[k];
      err = std::max(err, max_abs_diff(F[k], root_i * std::exp(-w * w / 2)));
    }
    EXPECT_LT(err, 1e-7);
  }
}

TEST(Qpft1d, GaussianGeneralParameters) {
  const double k = 0.5;
  const QSignal1D f = sample_1d(256, 20.0, [&](double x) { return Quaternion{std::exp(-k * x * x)}; });
  for (const QPFTParams& mu : {QPFTParams(1, 2, 1, 1, 1), QPFTParams(0.5, -1, 0.3, -0.4, 0.2)}) {
    const QSignal1D F = qpft1d_forward(f, mu, Method::fast);
    double err = 0.0;
    for (std::size_t j = 0; j < F.size(); ++j)
      err = std::max(err, max_abs_diff(F[j], Quaternion::from_complex(gaussian_1d(mu, k, F.axis()[j]))));
    EXPECT_LT(err, 1e-7) << mu.to_string();
  }
}

TEST(Qpft1d, ZeroMapsToZero) {
  const QSignal1D z(QSignal1D::centered_axis(16, 8.0), std::vector<Quaternion>(16));
  const QPFTParams mu(0, 1, 0, 0, 0);
  const QSignal1D F = qpft1d_forward(z, mu);
  for (const auto& q : F.samples()) EXPECT_EQ(q, Quaternion{});
  const UniformAxis w = induced_frequency_axis(z.axis(), mu);
  const QSignal1D g = qpft1d_inverse(QSignal1D(w, std::vector<Quaternion>(16)), mu, z.axis());
  for (const auto& q : g.samples()) EXPECT_EQ(q, Quaternion{});
}

TEST(Qpft1d, FastMatchesDirect) {
  for (const QPFTParams& mu :
       {QPFTParams(0, 1, 0, 0, 0), QPFTParams(1, 2, 1, 1, 1), QPFTParams(1, -1, 0, 1, 0), QPFTParams(0.2, -2, 1, 0, 1)}) {
    const QSignal1D f = random_1d(32, 12.0, 5);
    EXPECT_LT(max_diff(qpft1d_forward(f, mu, Method::fast).samples(), qpft1d_forward(f, mu, Method::direct).samples()),
              1e-10)
        << mu.to_string();
  }
}

TEST(Qpft1d, ForwardAtMatchesGrid) {
  const QPFTParams mu(0.4, 1.5, -0.3, 0.2, 0.1);
  const QSignal1D f = random_1d(32, 12.0, 8);
  const QSignal1D F = qpft1d_forward(f, mu, Method::fast);
  const std::vector<double> freqs{F.axis()[3], F.axis()[17]};
  const auto at = qpft1d_forward_at(f, mu, freqs);
  EXPECT_LT(max_abs_diff(at[0], F[3]), 1e-10);
  EXPECT_LT(max_abs_diff(at[1], F[17]), 1e-10);
}

TEST(Qpft1d, RoundTrip) {
  const QSignal1D f = sample_1d(256, 20.0, [](double x) { return Quaternion{1, -0.5, 0.25, 2} * std::exp(-x * x / 2); });
  for (const QPFTParams& mu : {QPFTParams(0, 1, 0, 0, 0), QPFTParams(1, -2, 1, 1, 1)}) {
    for (Method m : {Method::direct, Method::fast}) {
      const QSignal1D g = qpft1d_inverse(qpft1d_forward(f, mu, m), mu, f.axis(), m);
      EXPECT_LT(max_diff(g.samples(), f.samples()), 1e-7);
    }
  }
}

TEST(Qpft1d, InverseAtPlainKernelIsInverseFourier) {
  const QPFTParams mu(0, 1, 0, 0, 0);
  const UniformAxis x = QSignal1D::centered_axis(32, 12.0);
  const UniformAxis w = induced_frequency_axis(x, mu);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<ComplexI> spec(32);
  std::vector<Quaternion> q(32);
  for (std::size_t k = 0; k < 32; ++k) {
    spec[k] = {u(rng), u(rng)};
    q[k] = Quaternion::from_complex(spec[k]);
  }
  const QSignal1D g = qpft1d_inverse(QSignal1D(w, q), mu, x);
  const ComplexI c = std::conj(sqrt_unit_complex(1.0)) / std::sqrt(2 * kPi);
  for (std::size_t p = 0; p < 32; ++p) {
    ComplexI acc{};
    for (std::size_t k = 0; k < 32; ++k) acc += spec[k] * std::polar(1.0, x[p] * w[k]) * w.step;
    EXPECT_LT(max_abs_diff(g[p], Quaternion::from_complex(c * acc)), 1e-9);
  }
}

TEST(Qpft1d, InverseRejectsMismatchedAxis) {
  const QPFTParams mu(0, 1, 0, 0, 0);
  const QSignal1D f = random_1d(16, 8.0, 1);
  EXPECT_THROW(qpft1d_inverse(f, mu, f.axis()), std::invalid_argument);
}

// Every side/plane/direction combination against an explicit quaternion sum.
class AxisEngine : public ::testing::TestWithParam<std::tuple<Side, Plane, Direction, bool, int>> {};

TEST_P(AxisEngine, MatchesQuaternionSum) {
  const auto [side, plane, dir, conjugate, axis] = GetParam();
  const QPFTParams mu(0.3, -1.5, 0.7, 0.2, -0.4);
  const std::size_t n1 = 8, n2 = 6;
  const std::size_t n_in = axis == 1 ? n1 : n2;
  const UniformAxis in{n_in, -static_cast<double>(n_in / 2) * 0.6, 0.6};
  const UniformAxis out = induced_frequency_axis(in, mu);
  std::mt19937_64 rng(21);
  std::vector<Quaternion> data(n1 * n2);
  for (auto& q : data) q = qqpft::testing::random_quaternion(rng);

  const AxisKernel kernel{mu, plane, side, conjugate};
  const auto direct = transform_axis_direct(data, n1, n2, axis, kernel, dir, in, out.coordinates());
  const auto fast = transform_axis_fast(data, n1, n2, axis, kernel, dir, in, out);

  const bool use_conj = (dir == Direction::inverse) != conjugate;
  double err = 0.0, fast_err = 0.0;
  for (std::size_t i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const std::size_t o = axis == 1 ? i1 : i2;
      Quaternion acc;
      for (std::size_t p = 0; p < n_in; ++p) {
        const double x = dir == Direction::forward ? in[p] : out[o];
        const double w = dir == Direction::forward ? out[o] : in[p];
        ComplexI kc = mu.kernel(x, w);
        if (use_conj) kc = std::conj(kc);
        const Quaternion kq = Quaternion::from_complex(kc, plane);
        const Quaternion v = axis == 1 ? data[p * n2 + i2] : data[i1 * n2 + p];
        acc += (side == Side::left ? kq * v : v * kq) * in.step;
      }
      err = std::max(err, max_abs_diff(acc, direct[i1 * n2 + i2]));
      fast_err = std::max(fast_err, max_abs_diff(direct[i1 * n2 + i2], fast[i1 * n2 + i2]));
    }
  }
  EXPECT_LT(err, 1e-13);
  EXPECT_LT(fast_err, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Combinations, AxisEngine,
                         ::testing::Combine(::testing::Values(Side::left, Side::right),
                                            ::testing::Values(Plane::i, Plane::j),
                                            ::testing::Values(Direction::forward, Direction::inverse),
                                            ::testing::Bool(), ::testing::Values(1, 2)));

TEST(Sided2d, LeftTransformOfSeparableGaussian) {
  const double k1 = 0.5, k2 = 1.0;
  const QSignal2D f = sample_function(Grid2D::centered(128, 128, 20.0, 8.0), GaussianSpec{k1, k2});
  const QPFTParams mu(1, 2, 0, 1, 1);
  const QSignal2D F = qpft_left2d(f, mu);
  EXPECT_EQ(F.grid().n2(), 128u);
  EXPECT_DOUBLE_EQ(F.grid().dx2(), f.grid().dx2());
  double err = 0.0;
  for (std::size_t m = 0; m < 128; ++m)
    for (std::size_t i2 = 0; i2 < 128; ++i2) {
      const double x2 = F.grid().x2(i2);
      const Quaternion expected = Quaternion::from_complex(gaussian_1d(mu, k1, F.grid().x1(m))) * std::exp(-k2 * x2 * x2);
      err = std::max(err, max_abs_diff(F(m, i2), expected));
    }
  EXPECT_LT(err, 1e-7);
}

TEST(Sided2d, RightTransformOfSeparableGaussian) {
  const double k1 = 1.0, k2 = 0.5;
  const QSignal2D f = sample_function(Grid2D::centered(64, 128, 8.0, 20.0), GaussianSpec{k1, k2});
  const QPFTParams mu(0, -1, 1, 0, 0);
  const QSignal2D F = qpft_right2d(f, mu);
  double err = 0.0;
  for (std::size_t i1 = 0; i1 < 64; ++i1)
    for (std::size_t m = 0; m < 128; ++m) {
      const double x1 = F.grid().x1(i1);
      const Quaternion expected =
          Quaternion::from_complex(gaussian_1d(mu, k2, F.grid().x2(m)), Plane::j) * std::exp(-k1 * x1 * x1);
      err = std::max(err, max_abs_diff(F(i1, m), expected));
    }
  EXPECT_LT(err, 1e-7);
}

TEST(Sided2d, FastMatchesDirectAndZero) {
  const QSignal2D f = sample_function(Grid2D::centered(16, 12.0), RandomSmoothSpec{3});
  const QPFTParams mu(1, -2, 1, 0, 1);
  EXPECT_LT(max_abs_diff(qpft_left2d(f, mu, Method::fast), qpft_left2d(f, mu, Method::direct)), 1e-10);
  EXPECT_LT(max_abs_diff(qpft_right2d(f, mu, Method::fast), qpft_right2d(f, mu, Method::direct)), 1e-10);
  const QSignal2D z(f.grid());
  EXPECT_EQ(max_abs(qpft_left2d(z, mu)), 0.0);
  EXPECT_EQ(max_abs(qpft_right2d(z, mu)), 0.0);
}

TEST(Sided2d, RightSidedParseval) {
  const Grid2D grid = Grid2D::centered(32, 16.0);
  const QPFTParams mu(1, 2, 0, 1, 1);
  const QSignal2D gauss = sample_function(grid, GaussianSpec{0.5, 0.5});
  EXPECT_TRUE(right_sided_parseval_check(gauss, gauss, mu).pass);
  const auto zero = right_sided_parseval_check(gauss, QSignal2D(grid), mu);
  EXPECT_TRUE(zero.pass);
  EXPECT_EQ(zero.details.at("inner_product_rel_error"), 0.0);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = right_sided_parseval_check(sample_function(grid, RandomSmoothSpec{seed}),
                                              sample_function(grid, RandomSmoothSpec{seed + 10}), mu);
    EXPECT_TRUE(r.pass) << r.max_abs_error;
  }
}

TEST(Sided2d, RightAfterLeftIsTwoSidedForComplexSignals) {
  // i-complex values commute with the left i-kernel, so either order gives the
  // same two-sided sum K^i f K^j
  const Grid2D grid = Grid2D::centered(16, 12.0);
  const QSignal2D q = sample_function(grid, RandomSmoothSpec{2});
  std::vector<Quaternion> s(q.samples().begin(), q.samples().end());
  for (auto& v : s) v = {v.r, v.x, 0, 0};
  const QSignal2D f(grid, s);
  const QPFTParams mu1(0.5, 1, 0.2, 0, 1), mu2(1, -2, 0, 1, 0);
  const QSignal2D a = qpft_right2d(qpft_left2d(f, mu1), mu2);
  const QSignal2D b = qpft_left2d(qpft_right2d(f, mu2), mu1);
  EXPECT_LT(max_abs_diff(a, b), 1e-12);
  // one explicit entry
  const std::size_t m1 = 5, m2 = 11;
  Quaternion acc;
  for (std::size_t p1 = 0; p1 < 16; ++p1)
    for (std::size_t p2 = 0; p2 < 16; ++p2)
      acc += Quaternion::from_complex(mu1.kernel(grid.x1(p1), a.grid().x1(m1))) * f(p1, p2) *
             Quaternion::from_complex(mu2.kernel(grid.x2(p2), a.grid().x2(m2)), Plane::j) * grid.cell_area();
  EXPECT_LT(max_abs_diff(acc, a(m1, m2)), 1e-12);
  (void)I;
  (void)J;
}
