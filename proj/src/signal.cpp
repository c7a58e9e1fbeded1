#include "qqpft/signal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "parallel_sum.hpp"

namespace qqpft {

namespace {

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch (" + describe(a) + " vs " + describe(b) + ")");
  }
}

void check_count(std::size_t n, const char* what) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": sample count must be even and >= 2, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<double> UniformAxis::coordinates() const {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = (*this)[k];
  return out;
}

Grid2D::Grid2D(std::size_t n1, std::size_t n2, double dx1, double dx2, double x1_0, double x2_0)
    : n1_(n1), n2_(n2), dx1_(dx1), dx2_(dx2), x1_0_(x1_0), x2_0_(x2_0) {
  check_count(n1, "Grid2D n1");
  check_count(n2, "Grid2D n2");
  if (!(dx1 > 0.0) || !(dx2 > 0.0) || !std::isfinite(dx1) || !std::isfinite(dx2)) {
    throw std::invalid_argument("Grid2D: spacings must be positive and finite");
  }
  if (!std::isfinite(x1_0) || !std::isfinite(x2_0)) throw std::invalid_argument("Grid2D: origin must be finite");
}

Grid2D Grid2D::centered(std::size_t n1, std::size_t n2, double extent1, double extent2) {
  check_count(n1, "Grid2D n1");
  check_count(n2, "Grid2D n2");
  const double dx1 = extent1 / static_cast<double>(n1);
  const double dx2 = extent2 / static_cast<double>(n2);
  return Grid2D(n1, n2, dx1, dx2, -static_cast<double>(n1 / 2) * dx1, -static_cast<double>(n2 / 2) * dx2);
}

UniformAxis Grid2D::axis(int axis) const {
  if (axis == 1) return {n1_, x1_0_, dx1_};
  if (axis == 2) return {n2_, x2_0_, dx2_};
  throw std::invalid_argument("Grid2D::axis: axis must be 1 or 2");
}

bool Grid2D::is_centered() const {
  const auto centered_origin = [](std::size_t n, double dx) { return -static_cast<double>(n / 2) * dx; };
  return std::fabs(x1_0_ - centered_origin(n1_, dx1_)) <= 1e-12 * dx1_ * static_cast<double>(n1_) &&
         std::fabs(x2_0_ - centered_origin(n2_, dx2_)) <= 1e-12 * dx2_ * static_cast<double>(n2_);
}

std::string describe(const Grid2D& g) {
  std::ostringstream os;
  os.precision(17);
  os << g.n1() << "x" << g.n2() << " dx=(" << g.dx1() << "," << g.dx2() << ") x0=(" << g.x1_0() << ","
     << g.x2_0() << ")";
  return os.str();
}

QSignal2D::QSignal2D(Grid2D grid) : grid_(grid), samples_(grid.size()) {}

QSignal2D::QSignal2D(Grid2D grid, std::vector<Quaternion> samples) : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw std::invalid_argument("QSignal2D: expected " + std::to_string(grid_.size()) + " samples, got " +
                                std::to_string(samples_.size()));
  }
}

GridMask::GridMask(Grid2D grid, std::vector<std::uint8_t> bits) : grid_(grid), bits_(std::move(bits)) {
  if (bits_.size() != grid_.size()) throw std::invalid_argument("GridMask: bit count does not match grid");
}

GridMask GridMask::full(const Grid2D& grid) { return {grid, std::vector<std::uint8_t>(grid.size(), 1)}; }
GridMask GridMask::empty(const Grid2D& grid) { return {grid, std::vector<std::uint8_t>(grid.size(), 0)}; }

GridMask GridMask::disk(const Grid2D& grid, double radius) {
  std::vector<std::uint8_t> bits(grid.size(), 0);
  for (std::size_t i1 = 0; i1 < grid.n1(); ++i1) {
    for (std::size_t i2 = 0; i2 < grid.n2(); ++i2) {
      const double r2 = grid.x1(i1) * grid.x1(i1) + grid.x2(i2) * grid.x2(i2);
      bits[grid.index(i1, i2)] = r2 <= radius * radius ? 1 : 0;
    }
  }
  return {grid, std::move(bits)};
}

std::size_t GridMask::count() const {
  return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }));
}

QSignal1D::QSignal1D(UniformAxis axis, std::vector<Quaternion> samples) : axis_(axis), samples_(std::move(samples)) {
  check_count(axis_.n, "QSignal1D n");
  if (!(axis_.step > 0.0)) throw std::invalid_argument("QSignal1D: spacing must be positive");
  if (samples_.size() != axis_.n) throw std::invalid_argument("QSignal1D: sample count does not match axis");
}

UniformAxis QSignal1D::centered_axis(std::size_t n, double extent) {
  check_count(n, "QSignal1D n");
  const double dx = extent / static_cast<double>(n);
  return {n, -static_cast<double>(n / 2) * dx, dx};
}

Quaternion inner_product(const QSignal2D& f, const QSignal2D& g) {
  require_same_grid(f.grid(), g.grid(), "inner_product");
  const auto& grid = f.grid();
  const Quaternion s = detail::lattice_sum_q(grid.n1(), grid.n2(), [&](std::size_t i1, std::size_t i2) {
    return f(i1, i2) * conj(g(i1, i2));
  });
  return s * grid.cell_area();
}

double scalar_inner(const QSignal2D& f, const QSignal2D& g) {
  require_same_grid(f.grid(), g.grid(), "scalar_inner");
  const auto& grid = f.grid();
  // [f conj(g)]_0 is the Euclidean dot product of the components
  const double s = detail::lattice_sum(grid.n1(), grid.n2(), [&](std::size_t i1, std::size_t i2) {
    const Quaternion& a = f(i1, i2);
    const Quaternion& b = g(i1, i2);
    return a.r * b.r + a.x * b.x + a.y * b.y + a.z * b.z;
  });
  return s * grid.cell_area();
}

double energy(const QSignal2D& f) {
  const auto& grid = f.grid();
  return detail::lattice_sum(grid.n1(), grid.n2(),
                             [&](std::size_t i1, std::size_t i2) { return norm_squared(f(i1, i2)); }) *
         grid.cell_area();
}

double lp_norm(const QSignal2D& f, double p) {
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (const auto& q : f.samples()) m = std::max(m, norm(q));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
  if (p == 2.0) return std::sqrt(energy(f));
  const auto& grid = f.grid();
  const double s = detail::lattice_sum(grid.n1(), grid.n2(),
                                       [&](std::size_t i1, std::size_t i2) { return std::pow(norm(f(i1, i2)), p); });
  return std::pow(s * grid.cell_area(), 1.0 / p);
}

double l2_norm(const QSignal2D& f) { return lp_norm(f, 2.0); }

namespace {

// ln|eta(i t)| for t >= 1 via the product formula
double log_abs_eta_imag(double t) {
  double s = -std::numbers::pi * t / 12.0;
  for (int k = 1; k < 64; ++k) {
    const double q = std::exp(-2.0 * std::numbers::pi * t * static_cast<double>(k));
    if (q < 1e-18) break;
    s += std::log1p(-q);
  }
  return s;
}

// ln h1 - ln 2 pi - 2 ln|eta(i h2/h1)| for h1 <= h2
double log_lattice_constant(double dx1, double dx2) {
  const double h1 = std::min(dx1, dx2);
  const double h2 = std::max(dx1, dx2);
  return std::log(h1) - std::log(2.0 * std::numbers::pi) - 2.0 * log_abs_eta_imag(h2 / h1);
}

}  // namespace

double moment(const QSignal2D& f, MomentKind kind, int axis) {
  const auto& grid = f.grid();
  if (kind == MomentKind::axis_spread && axis != 1 && axis != 2) {
    throw std::invalid_argument("moment: axis must be 1 or 2");
  }
  const double s = detail::lattice_sum(grid.n1(), grid.n2(), [&](std::size_t i1, std::size_t i2) {
    const double x1 = grid.x1(i1);
    const double x2 = grid.x2(i2);
    const double w = norm_squared(f(i1, i2));
    switch (kind) {
      case MomentKind::axis_spread:
        return (axis == 1 ? x1 * x1 : x2 * x2) * w;
      case MomentKind::radial:
        return (x1 * x1 + x2 * x2) * w;
      case MomentKind::log_radial: {
        const double r2 = x1 * x1 + x2 * x2;
        return r2 > 0.0 ? 0.5 * std::log(r2) * w : 0.0;
      }
    }
    return 0.0;
  });
  double total = s * grid.cell_area();
  if (kind == MomentKind::log_radial) {
    // the punctured sum misses the singular cell at the origin; add back the
    // lattice constant of sum' ln|x| (Kronecker limit formula) times |f(0)|^2
    const double t1 = -grid.x1_0() / grid.dx1();
    const double t2 = -grid.x2_0() / grid.dx2();
    const double i1 = std::round(t1), i2 = std::round(t2);
    if (std::fabs(t1 - i1) < 1e-9 && std::fabs(t2 - i2) < 1e-9 && i1 >= 0 && i2 >= 0 &&
        i1 < static_cast<double>(grid.n1()) && i2 < static_cast<double>(grid.n2())) {
      const double at_origin = norm_squared(f(static_cast<std::size_t>(i1), static_cast<std::size_t>(i2)));
      total += grid.cell_area() * at_origin * log_lattice_constant(grid.dx1(), grid.dx2());
    }
  }
  return total;
}

double concentration_epsilon(const QSignal2D& f, const GridMask& mask) {
  require_same_grid(f.grid(), mask.grid(), "concentration_epsilon");
  const auto& grid = f.grid();
  const double total = energy(f);
  if (!(total > 0.0)) throw std::invalid_argument("concentration_epsilon: zero signal");
  const double outside = detail::lattice_sum(grid.n1(), grid.n2(), [&](std::size_t i1, std::size_t i2) {
                           return mask(i1, i2) ? 0.0 : norm_squared(f(i1, i2));
                         }) *
                         grid.cell_area();
  return std::sqrt(outside / total);
}

QSignal2D chirp_multiply(const QSignal2D& f, Side side, Plane axis, double c2, double c1, double c0) {
  const auto& grid = f.grid();
  const std::size_t n_axis = axis == Plane::i ? grid.n1() : grid.n2();
  std::vector<Quaternion> phase(n_axis);
  for (std::size_t k = 0; k < n_axis; ++k) {
    const double u = axis == Plane::i ? grid.x1(k) : grid.x2(k);
    phase[k] = exp_unit(axis, c2 * u * u + c1 * u + c0);
  }
  std::vector<Quaternion> out(grid.size());
  const long n1 = static_cast<long>(grid.n1());
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < n1; ++i1) {
    for (std::size_t i2 = 0; i2 < grid.n2(); ++i2) {
      const Quaternion& e = phase[axis == Plane::i ? static_cast<std::size_t>(i1) : i2];
      const Quaternion& s = f(static_cast<std::size_t>(i1), i2);
      out[grid.index(static_cast<std::size_t>(i1), i2)] = side == Side::left ? e * s : s * e;
    }
  }
  return {grid, std::move(out)};
}

QSignal2D linear_combination(double alpha, const QSignal2D& f, double beta, const QSignal2D& g) {
  require_same_grid(f.grid(), g.grid(), "linear_combination");
  std::vector<Quaternion> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = alpha * f[k] + beta * g[k];
  return {f.grid(), std::move(out)};
}

QSignal2D multiply(const Quaternion& left, const QSignal2D& f, const Quaternion& right) {
  std::vector<Quaternion> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = left * f[k] * right;
  return {f.grid(), std::move(out)};
}

double max_abs_diff(const QSignal2D& f, const QSignal2D& g) {
  require_same_grid(f.grid(), g.grid(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, max_abs_diff(f[k], g[k]));
  return m;
}

double max_abs(const QSignal2D& f) {
  double m = 0.0;
  for (const auto& q : f.samples()) m = std::max({m, std::fabs(q.r), std::fabs(q.x), std::fabs(q.y), std::fabs(q.z)});
  return m;
}

QSignal2D shift_samples(const QSignal2D& f, long s1, long s2) {
  const auto& grid = f.grid();
  std::vector<Quaternion> out(grid.size());
  const long n1 = static_cast<long>(grid.n1());
  const long n2 = static_cast<long>(grid.n2());
  for (long i1 = 0; i1 < n1; ++i1) {
    const long j1 = i1 - s1;
    if (j1 < 0 || j1 >= n1) continue;
    for (long i2 = 0; i2 < n2; ++i2) {
      const long j2 = i2 - s2;
      if (j2 < 0 || j2 >= n2) continue;
      out[grid.index(static_cast<std::size_t>(i1), static_cast<std::size_t>(i2))] =
          f(static_cast<std::size_t>(j1), static_cast<std::size_t>(j2));
    }
  }
  return {grid, std::move(out)};
}

namespace {

struct Bump {
  Quaternion amplitude;
  double c1, c2, sigma, nu1, nu2;
};

std::vector<Bump> random_bumps(const Grid2D& grid, const RandomSmoothSpec& spec) {
  if (spec.bumps < 1) throw std::invalid_argument("random signal: bumps must be >= 1");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  const double extent = std::min(grid.dx1() * static_cast<double>(grid.n1()), grid.dx2() * static_cast<double>(grid.n2()));
  const double nyquist = std::numbers::pi / std::max(grid.dx1(), grid.dx2());
  const double mid1 = grid.x1_0() + 0.5 * grid.dx1() * static_cast<double>(grid.n1());
  const double mid2 = grid.x2_0() + 0.5 * grid.dx2() * static_cast<double>(grid.n2());
  std::vector<Bump> bumps(static_cast<std::size_t>(spec.bumps));
  for (auto& b : bumps) {
    b.amplitude = {unit(rng), unit(rng), unit(rng), unit(rng)};
    b.c1 = mid1 + unit(rng) * extent / 16.0;
    b.c2 = mid2 + unit(rng) * extent / 16.0;
    b.sigma = extent * (1.0 / 32.0 + frac(rng) * (1.0 / 20.0 - 1.0 / 32.0));
    b.nu1 = unit(rng) * nyquist / 8.0;
    b.nu2 = unit(rng) * nyquist / 8.0;
  }
  return bumps;
}

}  // namespace

QSignal2D sample_function(const Grid2D& grid, const SignalSpec& spec) {
  std::vector<Quaternion> out(grid.size());
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        std::vector<Bump> bumps;
        if constexpr (std::is_same_v<T, RandomSmoothSpec>) bumps = random_bumps(grid, s);
        for (std::size_t i1 = 0; i1 < grid.n1(); ++i1) {
          const double x1 = grid.x1(i1);
          for (std::size_t i2 = 0; i2 < grid.n2(); ++i2) {
            const double x2 = grid.x2(i2);
            Quaternion v;
            if constexpr (std::is_same_v<T, GaussianSpec>) {
              v = Quaternion{std::exp(-(s.k1 * x1 * x1 + s.k2 * x2 * x2))};
            } else if constexpr (std::is_same_v<T, ChirpedGaussianSpec>) {
              v = exp_i(s.a1 * x1 * x1) * Quaternion{std::exp(-(s.k1 * x1 * x1 + s.k2 * x2 * x2))} *
                  exp_j(s.a2 * x2 * x2);
            } else if constexpr (std::is_same_v<T, BoxSpec>) {
              v = (std::fabs(x1) <= s.h1 && std::fabs(x2) <= s.h2) ? s.value : Quaternion{};
            } else {
              for (const auto& b : bumps) {
                const double d1 = x1 - b.c1;
                const double d2 = x2 - b.c2;
                const double g = std::exp(-(d1 * d1 + d2 * d2) / (2.0 * b.sigma * b.sigma));
                v += exp_i(b.nu1 * x1) * (b.amplitude * g) * exp_j(b.nu2 * x2);
              }
            }
            out[grid.index(i1, i2)] = v;
          }
        }
      },
      spec);
  return {grid, std::move(out)};
}

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw std::invalid_argument("invalid number '" + item + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

SignalSpec parse_signal_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
  const auto need = [&](std::size_t n) {
    auto v = parse_numbers(args);
    if (v.size() != n) throw std::invalid_argument("signal '" + kind + "' expects " + std::to_string(n) + " values");
    return v;
  };
  if (kind == "gaussian") {
    const auto v = need(2);
    return GaussianSpec{v[0], v[1]};
  }
  if (kind == "chirped") {
    const auto v = need(4);
    return ChirpedGaussianSpec{v[0], v[1], v[2], v[3]};
  }
  if (kind == "box") {
    const auto v = need(2);
    return BoxSpec{v[0], v[1], Quaternion{1.0}};
  }
  if (kind == "random") {
    const auto v = need(1);
    if (v[0] < 0 || v[0] != std::floor(v[0])) throw std::invalid_argument("random seed must be a non-negative integer");
    return RandomSmoothSpec{static_cast<std::uint64_t>(v[0]), 4};
  }
  throw std::invalid_argument("unknown signal descriptor '" + text + "'");
}

}  // namespace qqpft
