#include "qqpft/qft.hpp"

#include <numbers>
#include <stdexcept>

#include "qqpft/exp_sum.hpp"

namespace qqpft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

UniformAxis reciprocal_axis(const UniformAxis& a) {
  const double step = kTwoPi / (static_cast<double>(a.n) * a.step);
  return {a.n, -static_cast<double>(a.n / 2) * step, step};
}

}  // namespace

Grid2D qft_frequency_grid(const Grid2D& space) {
  const UniformAxis w1 = reciprocal_axis(space.axis(1));
  const UniformAxis w2 = reciprocal_axis(space.axis(2));
  return Grid2D(w1.n, w2.n, w1.step, w2.step, w1.origin, w2.origin);
}

QSignal2D qft_direct(const QSignal2D& f) {
  const Grid2D& space = f.grid();
  const Grid2D freq = qft_frequency_grid(space);
  const std::size_t n1 = space.n1();
  const std::size_t n2 = space.n2();

  // kernel tables e^{-i x1 w1} and e^{-j x2 w2}
  std::vector<Quaternion> k1(n1 * n1), k2(n2 * n2);
  for (std::size_t m = 0; m < n1; ++m)
    for (std::size_t p = 0; p < n1; ++p) k1[m * n1 + p] = exp_i(-space.x1(p) * freq.x1(m));
  for (std::size_t m = 0; m < n2; ++m)
    for (std::size_t p = 0; p < n2; ++p) k2[m * n2 + p] = exp_j(-space.x2(p) * freq.x2(m));

  const double scale = space.cell_area() / kTwoPi;
  std::vector<Quaternion> out(freq.size());
#pragma omp parallel for schedule(static)
  for (long m1 = 0; m1 < static_cast<long>(n1); ++m1) {
    for (std::size_t m2 = 0; m2 < n2; ++m2) {
      Quaternion acc;
      for (std::size_t p1 = 0; p1 < n1; ++p1) {
        const Quaternion& left = k1[static_cast<std::size_t>(m1) * n1 + p1];
        for (std::size_t p2 = 0; p2 < n2; ++p2) acc += left * f(p1, p2) * k2[m2 * n2 + p2];
      }
      out[freq.index(static_cast<std::size_t>(m1), m2)] = acc * scale;
    }
  }
  return {freq, std::move(out)};
}

QSignal2D qft_fast(const QSignal2D& f) {
  const Grid2D& space = f.grid();
  const Grid2D freq = qft_frequency_grid(space);
  auto out = two_sided_exp_sum(f.samples(), space.axis(1), freq.axis(1), space.axis(2), freq.axis(2), -1);
  const double scale = space.cell_area() / kTwoPi;
  for (auto& q : out) q *= scale;
  return {freq, std::move(out)};
}

QSignal2D iqft(const QSignal2D& spectrum, const Grid2D& space) {
  const Grid2D freq = qft_frequency_grid(space);
  if (!(spectrum.grid() == freq)) {
    throw std::invalid_argument("iqft: spectrum grid does not match the frequency grid of the space grid");
  }
  auto out = two_sided_exp_sum(spectrum.samples(), freq.axis(1), space.axis(1), freq.axis(2), space.axis(2), +1);
  const double scale = freq.cell_area() / kTwoPi;
  for (auto& q : out) q *= scale;
  return {space, std::move(out)};
}

}  // namespace qqpft
