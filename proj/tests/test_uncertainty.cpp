#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qqpft/uncertainty.hpp"

using namespace qqpft;

namespace {

const QPFTParams plain(0, 1, 0, 0, 0);
const QQPFTParams plain2{plain, plain};

QSignal2D unit_gaussian(std::size_t n = 128, double extent = 24.0) {
  return sample_function(Grid2D::centered(n, extent), GaussianSpec{0.5, 0.5});
}

QSignal2D random_signal(std::uint64_t seed, std::size_t n = 64, double extent = 16.0) {
  return sample_function(Grid2D::centered(n, extent), RandomSmoothSpec{seed});
}

QSignal2D scaled(const QSignal2D& f, double s) { return linear_combination(s, f, 0.0, f); }

std::vector<QQPFTParams> sweep() {
  std::vector<QQPFTParams> out;
  for (double a : {0.0, 1.0})
    for (double b : {1.0, 2.0})
      for (double c : {0.0, 1.0}) out.push_back({QPFTParams(a, b, c, 0, 0), QPFTParams(c, b, a, 0, 0)});
  return out;
}

}  // namespace

TEST(Heisenberg, GaussianSaturates) {
  for (int axis : {1, 2}) {
    const UPReport r = heisenberg_ratio(unit_gaussian(), plain2, axis);
    EXPECT_NEAR(r.value, 1.0, 1e-3);
    EXPECT_NEAR(r.extra.at("spatial_spread"), std::numbers::pi / 2, 1e-6);
    EXPECT_NEAR(r.extra.at("spectral_spread"), std::numbers::pi / 2, 1e-6);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Heisenberg, SaturatesForAnyBAndOutputChirp) {
  for (double b : {1.0, 2.0, -2.0}) {
    const QQPFTParams p{QPFTParams(0, b, 1, 0, 0.5), QPFTParams(0, b, 0.3, 0, 1)};
    EXPECT_NEAR(heisenberg_ratio(unit_gaussian(), p, 1).value, 1.0, 1e-3) << b;
    EXPECT_NEAR(heisenberg_ratio(unit_gaussian(), p, 2).value, 1.0, 1e-3) << b;
  }
}

TEST(Heisenberg, InputChirpInflatesSpectralSpread) {
  const QQPFTParams p{QPFTParams(1, 1, 0, 0, 0), plain};
  const UPReport r = heisenberg_ratio(unit_gaussian(), p, 1);
  EXPECT_GT(r.value, 1.5);
  EXPECT_NEAR(r.extra.at("spatial_spread"), std::numbers::pi / 2, 1e-6);
}

TEST(Heisenberg, RandomSuite) {
  for (const auto& p : sweep())
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      for (int axis : {1, 2}) {
        const UPReport r = heisenberg_ratio(random_signal(seed), p, axis);
        EXPECT_TRUE(r.pass) << p.to_string() << " seed " << seed << " ratio " << r.value;
      }
}

TEST(Heisenberg, RejectsZeroSignalAndBadAxis) {
  const QSignal2D z(Grid2D::centered(8, 8.0));
  EXPECT_THROW(heisenberg_ratio(z, plain2, 1), std::invalid_argument);
  EXPECT_THROW(heisenberg_ratio(unit_gaussian(16, 8.0), plain2, 3), std::invalid_argument);
}

TEST(Directional, GaussianRatioTwo) {
  const UPReport r = directional_ratio(unit_gaussian(), plain2);
  EXPECT_NEAR(r.lhs, std::numbers::pi * std::numbers::pi, 1e-5);
  EXPECT_NEAR(r.rhs, std::numbers::pi * std::numbers::pi / 2, 1e-5);
  EXPECT_NEAR(r.value, 2.0, 1e-3);
}

TEST(Directional, RandomSuiteAndScaleInvariance) {
  for (const auto& p : sweep())
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const QSignal2D f = random_signal(seed);
      const UPReport r = directional_ratio(f, p);
      EXPECT_TRUE(r.pass) << p.to_string() << " ratio " << r.value;
      EXPECT_NEAR(directional_ratio(scaled(f, -3.5), p).value, r.value, 1e-12 * r.value);
    }
}

TEST(LogUP, Constants) {
  EXPECT_NEAR(log_constant(LogConstant::paper), 6.909627004301592, 1e-13);
  EXPECT_NEAR(log_constant(LogConstant::corrected), -1.2703628454614782, 1e-13);
}

TEST(LogUP, GaussianMoments) {
  const QSignal2D f = unit_gaussian();
  const UPReport c = log_up_slack(f, plain2, LogConstant::corrected);
  EXPECT_NEAR(c.lhs, -std::numbers::pi * std::numbers::egamma, 2e-3);
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.asserted);
  const UPReport p = log_up_slack(f, plain2, LogConstant::paper);
  EXPECT_FALSE(p.asserted);
  EXPECT_FALSE(p.pass);
  EXPECT_NEAR(p.rhs, 6.909627004301592 * std::numbers::pi, 1e-6);
}

TEST(LogUP, RandomSuiteEqualB) {
  for (const auto& p : sweep())
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const QSignal2D f = random_signal(seed);
      const UPReport r = log_up_slack(f, p, LogConstant::corrected);
      EXPECT_TRUE(r.pass) << p.to_string() << " slack " << r.value;
      EXPECT_NEAR(log_up_slack(scaled(f, 0.25), p, LogConstant::corrected).value, r.value, 1e-12);
    }
}

TEST(LogUP, RejectsUnequalB) {
  EXPECT_THROW(log_up_slack(unit_gaussian(16, 8.0), {plain, QPFTParams(0, 2, 0, 0, 0)}, LogConstant::corrected),
               std::invalid_argument);
}

TEST(DonohoStark, FullMasksPass) {
  const QSignal2D f = unit_gaussian(32, 12.0);
  const Grid2D w = induced_frequency_grid(f.grid(), plain2);
  const UPReport r = donoho_stark_check(f, plain2, GridMask::full(f.grid()), GridMask::full(w));
  EXPECT_EQ(r.extra.at("epsilon1"), 0.0);
  EXPECT_EQ(r.extra.at("epsilon2"), 0.0);
  EXPECT_NEAR(r.rhs, 2 * std::numbers::pi, 1e-15);
  EXPECT_TRUE(r.pass);
}

TEST(DonohoStark, EmptyMasksClampBound) {
  const QSignal2D f = unit_gaussian(32, 12.0);
  const Grid2D w = induced_frequency_grid(f.grid(), plain2);
  const UPReport r = donoho_stark_check(f, plain2, GridMask::empty(f.grid()), GridMask::empty(w));
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(DonohoStark, DiskMasksMonotone) {
  const QSignal2D f = unit_gaussian();
  const Grid2D w = induced_frequency_grid(f.grid(), plain2);
  double prev1 = 2.0, prev2 = 2.0;
  for (double radius : {2.0, 3.0, 4.0}) {
    const UPReport r = donoho_stark_check(f, plain2, GridMask::disk(f.grid(), radius), GridMask::disk(w, radius));
    EXPECT_TRUE(r.pass);
    EXPECT_GT(r.value, 0.0);
    EXPECT_LT(r.extra.at("epsilon1"), prev1);
    EXPECT_LT(r.extra.at("epsilon2"), prev2);
    prev1 = r.extra.at("epsilon1");
    prev2 = r.extra.at("epsilon2");
  }
}

TEST(HausdorffYoung, PlancherelEquality) {
  const UPReport r = hausdorff_young_slack(random_signal(1), sweep()[3], 2.0);
  EXPECT_NEAR(r.value, 0.0, 1e-9);
}

TEST(HausdorffYoung, SupBound) {
  const QQPFTParams p{QPFTParams(1, 2, 0, 1, 0), QPFTParams(0, -1, 1, 0, 1)};
  const QSignal2D f = random_signal(2);
  const UPReport r = hausdorff_young_slack(f, p, 1.0);
  EXPECT_NEAR(r.rhs, std::sqrt(2.0) / (2 * std::numbers::pi) * lp_norm(f, 1.0), 1e-12);
  EXPECT_TRUE(r.pass);
}

TEST(HausdorffYoung, RandomSuite) {
  for (const auto& p : sweep())
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      for (double pp : {1.0, 4.0 / 3.0, 2.0}) {
        const UPReport r = hausdorff_young_slack(random_signal(seed, 32), p, pp);
        EXPECT_TRUE(r.pass) << p.to_string() << " p " << pp << " slack " << r.value;
      }
  EXPECT_THROW(hausdorff_young_slack(random_signal(0, 16), plain2, 2.5), std::invalid_argument);
  EXPECT_THROW(hausdorff_young_slack(random_signal(0, 16), plain2, 0.5), std::invalid_argument);
}

TEST(DecayFit, ExactGaussian) {
  const QSignal2D f = sample_function(Grid2D::centered(64, 12.0), GaussianSpec{1.0, 1.0});
  const DecayFit fit = decay_rate_fit(f);
  EXPECT_NEAR(fit.alpha, 1.0, 1e-6);
  EXPECT_NEAR(fit.c, 1.0, 1e-6);
  EXPECT_GT(fit.r2, 1.0 - 1e-10);
}

TEST(DecayFit, NonGaussianFitsWorse) {
  const Grid2D g = Grid2D::centered(64, 12.0);
  std::vector<Quaternion> s(g.size());
  for (std::size_t i1 = 0; i1 < 64; ++i1)
    for (std::size_t i2 = 0; i2 < 64; ++i2) {
      const double x1 = g.x1(i1), x2 = g.x2(i2);
      s[g.index(i1, i2)] = Quaternion{std::exp(-(x1 * x1 + x2 * x2)) * (1 + 0.5 * std::cos(x1))};
    }
  const DecayFit bad = decay_rate_fit(QSignal2D(g, s));
  EXPECT_LT(bad.r2, 1.0 - 1e-6);
}

TEST(DecayFit, NeedsSupport) {
  const Grid2D g = Grid2D::centered(8, 8.0);
  EXPECT_THROW(decay_rate_fit(sample_function(g, GaussianSpec{})), std::invalid_argument);
}

TEST(Hardy, GaussianFamilyOnBoundary) {
  for (double k : {0.5, 1.0, 2.0}) {
    const QSignal2D f = sample_function(Grid2D::centered(256, 32.0), GaussianSpec{k, k});
    const UPReport r = hardy_diagnostic(f, plain2);
    EXPECT_NEAR(r.extra.at("alpha"), k, 1e-6);
    EXPECT_NEAR(r.value, 0.25, 1e-4) << k;
    EXPECT_TRUE(r.pass) << k << " r2 " << r.extra.at("r2_frequency");
  }
}

TEST(Hardy, ScaledFrequencyCoordinates) {
  const QSignal2D f = sample_function(Grid2D::centered(256, 32.0), GaussianSpec{1.0, 1.0});
  const QQPFTParams p{QPFTParams(0, 2, 1, 0, 0), QPFTParams(0, 2, 0, 0, 1)};
  EXPECT_NEAR(hardy_diagnostic(f, p).value, 0.25, 1e-4);
}
