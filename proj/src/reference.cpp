#include "qqpft/reference.hpp"

#include <numbers>

#include "qqpft/qft.hpp"

namespace qqpft::reference {

QSignal2D qft_direct(const QSignal2D& f) {
  const Grid2D& space = f.grid();
  const Grid2D freq = qft_frequency_grid(space);
  std::vector<Quaternion> out(freq.size());
  for (std::size_t m1 = 0; m1 < freq.n1(); ++m1)
    for (std::size_t m2 = 0; m2 < freq.n2(); ++m2) {
      Quaternion acc;
      for (std::size_t p1 = 0; p1 < space.n1(); ++p1)
        for (std::size_t p2 = 0; p2 < space.n2(); ++p2)
          acc += exp_i(-space.x1(p1) * freq.x1(m1)) * f(p1, p2) * exp_j(-space.x2(p2) * freq.x2(m2));
      out[freq.index(m1, m2)] = acc * (space.cell_area() / (2.0 * std::numbers::pi));
    }
  return {freq, std::move(out)};
}

QSignal2D forward_direct(const QSignal2D& f, const QQPFTParams& p) {
  const Grid2D& space = f.grid();
  const Grid2D freq = induced_frequency_grid(space, p);
  std::vector<Quaternion> out(freq.size());
  for (std::size_t m1 = 0; m1 < freq.n1(); ++m1)
    for (std::size_t m2 = 0; m2 < freq.n2(); ++m2) {
      Quaternion acc;
      for (std::size_t p1 = 0; p1 < space.n1(); ++p1)
        for (std::size_t p2 = 0; p2 < space.n2(); ++p2) {
          const Quaternion k1 = Quaternion::from_complex(p.mu1.kernel(space.x1(p1), freq.x1(m1)), Plane::i);
          const Quaternion k2 = Quaternion::from_complex(p.mu2.kernel(space.x2(p2), freq.x2(m2)), Plane::j);
          acc += k1 * f(p1, p2) * k2;
        }
      out[freq.index(m1, m2)] = acc * space.cell_area();
    }
  return {freq, std::move(out)};
}

}  // namespace qqpft::reference
