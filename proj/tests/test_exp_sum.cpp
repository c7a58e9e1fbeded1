#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qqpft/exp_sum.hpp"
#include "test_support.hpp"

using namespace qqpft;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<ComplexI> random_line(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ComplexI> v(n);
  for (auto& c : v) c = {u(rng), u(rng)};
  return v;
}

double max_diff(const std::vector<ComplexI>& a, const std::vector<ComplexI>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

class ExpSumCase : public ::testing::TestWithParam<std::tuple<std::size_t, double, int>> {};

TEST_P(ExpSumCase, MatchesDirectSum) {
  const auto [n, scale, sign] = GetParam();
  const double dx = 0.37;
  const UniformAxis u{n, -static_cast<double>(n / 2) * dx, dx};
  const double dv = kTwoPi / (static_cast<double>(n) * dx) * scale;
  const UniformAxis v{n, -static_cast<double>(n / 2) * dv + 0.1 * dv, dv};
  const auto in = random_line(n, n);
  const ExpSum1D sum(u, v, sign);
  EXPECT_LT(max_diff(sum(in), exp_sum_direct(in, u, v.coordinates(), sign)), 1e-12 * static_cast<double>(n));
}

INSTANTIATE_TEST_SUITE_P(Axes, ExpSumCase,
                         ::testing::Combine(::testing::Values<std::size_t>(2, 8, 30, 64), ::testing::Values(1.0, -1.0),
                                            ::testing::Values(1, -1)));

TEST(ExpSum, RejectsNonReciprocalAxes) {
  EXPECT_THROW(ExpSum1D(UniformAxis{8, 0.0, 1.0}, UniformAxis{8, 0.0, 1.0}, -1), std::invalid_argument);
  EXPECT_THROW(ExpSum1D(UniformAxis{8, 0.0, 1.0}, UniformAxis{4, 0.0, kTwoPi / 8}, -1), std::invalid_argument);
  EXPECT_THROW(ExpSum1D(UniformAxis{8, 0.0, 1.0}, UniformAxis{8, 0.0, kTwoPi / 8}, 2), std::invalid_argument);
}

TEST(TwoSidedExpSum, MatchesQuaternionDirectSum) {
  const std::size_t n1 = 6, n2 = 8;
  const UniformAxis u1{n1, -1.5, 0.5}, u2{n2, -2.0, 0.5};
  const UniformAxis v1{n1, -2.0, kTwoPi / (n1 * 0.5)}, v2{n2, 1.0, -kTwoPi / (n2 * 0.5)};
  std::mt19937_64 rng(3);
  std::vector<Quaternion> in(n1 * n2);
  for (auto& q : in) q = qqpft::testing::random_quaternion(rng);
  for (int sign : {-1, 1}) {
    const auto out = two_sided_exp_sum(in, u1, v1, u2, v2, sign);
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
      for (std::size_t m2 = 0; m2 < n2; ++m2) {
        Quaternion acc;
        for (std::size_t p1 = 0; p1 < n1; ++p1)
          for (std::size_t p2 = 0; p2 < n2; ++p2)
            acc += exp_i(sign * u1[p1] * v1[m1]) * in[p1 * n2 + p2] * exp_j(sign * u2[p2] * v2[m2]);
        EXPECT_LT(max_abs_diff(acc, out[m1 * n2 + m2]), 1e-12);
      }
    }
  }
}
