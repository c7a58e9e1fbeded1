#include "qqpft/qqpft.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qqpft/exp_sum.hpp"
#include "qqpft/qft.hpp"

namespace qqpft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexI cis(double theta) { return {std::cos(theta), std::sin(theta)}; }

Quaternion qi(ComplexI c) { return Quaternion::from_complex(c, Plane::i); }
Quaternion qj(ComplexI c) { return Quaternion::from_complex(c, Plane::j); }

void require_grid(const Grid2D& actual, const Grid2D& expected, const char* what) {
  if (!(actual == expected)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch (" + describe(actual) + " vs " +
                                describe(expected) + ")");
  }
}

// Integer sample offset of `offset` on a spacing `step`; throws when off-grid.
long grid_offset(double offset, double step, const char* what) {
  const double t = offset / step;
  const double r = std::round(t);
  if (!std::isfinite(t) || std::fabs(t - r) > 1e-9 * std::fmax(1.0, std::fabs(t))) {
    throw std::invalid_argument(std::string(what) + ": offset " + std::to_string(offset) +
                                " is not a multiple of the grid spacing " + std::to_string(step));
  }
  return static_cast<long>(r);
}

std::vector<double> offset_coordinates(const UniformAxis& axis, double delta) {
  std::vector<double> c = axis.coordinates();
  for (double& v : c) v += delta;
  return c;
}

std::string with_offsets(const QQPFTParams& p, const char* label, std::array<double, 2> v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " %s=(%.17g, %.17g)", label, v[0], v[1]);
  return p.to_string() + buf;
}

}  // namespace

std::string QQPFTParams::to_string() const { return "mu1=" + mu1.to_string() + " mu2=" + mu2.to_string(); }

Grid2D induced_frequency_grid(const Grid2D& space, const QQPFTParams& p) {
  const UniformAxis w1 = induced_frequency_axis(space.axis(1), p.mu1);
  const UniformAxis w2 = induced_frequency_axis(space.axis(2), p.mu2);
  return Grid2D(w1.n, w2.n, w1.step, w2.step, w1.origin, w2.origin);
}

QQPFTPlan::QQPFTPlan(const Grid2D& space, const QQPFTParams& params)
    : space_(space), frequency_(induced_frequency_grid(space, params)), params_(params) {
  const QPFTParams& m1 = params.mu1;
  const QPFTParams& m2 = params.mu2;
  const ComplexI root1 = sqrt_unit_complex(m1.b());
  const ComplexI root2 = sqrt_unit_complex(m2.b());
  in_left_.resize(space.n1());
  out_left_.resize(space.n1());
  in_right_.resize(space.n2());
  out_right_.resize(space.n2());
  for (std::size_t k = 0; k < space.n1(); ++k) {
    const double x = space.x1(k), w = frequency_.x1(k);
    in_left_[k] = root1 * cis(-(m1.a() * x * x + m1.d() * x));
    out_left_[k] = cis(-(m1.c() * w * w + m1.e() * w));
  }
  for (std::size_t k = 0; k < space.n2(); ++k) {
    const double x = space.x2(k), w = frequency_.x2(k);
    in_right_[k] = root2 * cis(-(m2.a() * x * x + m2.d() * x));
    out_right_[k] = cis(-(m2.c() * w * w + m2.e() * w));
  }
}

QSignal2D QQPFTPlan::forward(const QSignal2D& f) const {
  require_grid(f.grid(), space_, "QQPFTPlan::forward");
  const std::size_t n1 = space_.n1(), n2 = space_.n2();
  std::vector<Quaternion> g(f.size());
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < static_cast<long>(n1); ++i1) {
    const Quaternion left = qi(in_left_[static_cast<std::size_t>(i1)]);
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const std::size_t k = space_.index(static_cast<std::size_t>(i1), i2);
      g[k] = left * f[k] * qj(in_right_[i2]);
    }
  }

  const UniformAxis bw1{n1, params_.mu1.b() * frequency_.x1_0(), params_.mu1.b() * frequency_.dx1()};
  const UniformAxis bw2{n2, params_.mu2.b() * frequency_.x2_0(), params_.mu2.b() * frequency_.dx2()};
  auto out = two_sided_exp_sum(g, space_.axis(1), bw1, space_.axis(2), bw2, -1);

  const double scale = space_.cell_area() / kTwoPi;
#pragma omp parallel for schedule(static)
  for (long m1 = 0; m1 < static_cast<long>(n1); ++m1) {
    const Quaternion left = qi(out_left_[static_cast<std::size_t>(m1)]);
    for (std::size_t m2 = 0; m2 < n2; ++m2) {
      const std::size_t k = frequency_.index(static_cast<std::size_t>(m1), m2);
      out[k] = left * (out[k] * scale) * qj(out_right_[m2]);
    }
  }
  return {frequency_, std::move(out)};
}

QSignal2D QQPFTPlan::inverse(const QSignal2D& spectrum) const {
  require_grid(spectrum.grid(), frequency_, "QQPFTPlan::inverse");
  const std::size_t n1 = space_.n1(), n2 = space_.n2();
  std::vector<Quaternion> h(spectrum.size());
#pragma omp parallel for schedule(static)
  for (long m1 = 0; m1 < static_cast<long>(n1); ++m1) {
    const Quaternion left = qi(std::conj(out_left_[static_cast<std::size_t>(m1)]));
    for (std::size_t m2 = 0; m2 < n2; ++m2) {
      const std::size_t k = frequency_.index(static_cast<std::size_t>(m1), m2);
      h[k] = left * spectrum[k] * qj(std::conj(out_right_[m2]));
    }
  }

  const double b1 = params_.mu1.b(), b2 = params_.mu2.b();
  const UniformAxis bw1{n1, b1 * frequency_.x1_0(), b1 * frequency_.dx1()};
  const UniformAxis bw2{n2, b2 * frequency_.x2_0(), b2 * frequency_.dx2()};
  auto out = two_sided_exp_sum(h, bw1, space_.axis(1), bw2, space_.axis(2), +1);

  const double scale = std::fabs(bw1.step * bw2.step) / kTwoPi;
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < static_cast<long>(n1); ++i1) {
    const Quaternion left = qi(std::conj(in_left_[static_cast<std::size_t>(i1)]) / std::fabs(b1));
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      const std::size_t k = space_.index(static_cast<std::size_t>(i1), i2);
      out[k] = left * (out[k] * scale) * qj(std::conj(in_right_[i2]) / std::fabs(b2));
    }
  }
  return {space_, std::move(out)};
}

QSignal2D forward_fast(const QSignal2D& f, const QQPFTParams& p) { return QQPFTPlan(f.grid(), p).forward(f); }

QSignal2D forward_direct(const QSignal2D& f, const QQPFTParams& p) {
  return forward_sided(f, p, Variant::two_sided, Method::direct);
}

std::vector<Quaternion> forward_direct(const QSignal2D& f, const QQPFTParams& p, std::span<const double> w1s,
                                       std::span<const double> w2s) {
  const Grid2D& g = f.grid();
  const auto rows = transform_axis_direct(f.samples(), g.n1(), g.n2(), 2, AxisKernel{p.mu2, Plane::j, Side::right},
                                          Direction::forward, g.axis(2), w2s);
  return transform_axis_direct(rows, g.n1(), w2s.size(), 1, AxisKernel{p.mu1, Plane::i, Side::left},
                               Direction::forward, g.axis(1), w1s);
}

std::vector<Quaternion> forward_direct(const QSignal2D& f, const QQPFTParams& p,
                                       std::span<const std::array<double, 2>> points) {
  const Grid2D& g = f.grid();
  const std::size_t n1 = g.n1(), n2 = g.n2();
  std::vector<Quaternion> out(points.size());
#pragma omp parallel
  {
    std::vector<Quaternion> k2(n2);
#pragma omp for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(points.size()); ++t) {
      const auto [w1, w2] = points[static_cast<std::size_t>(t)];
      for (std::size_t i2 = 0; i2 < n2; ++i2) k2[i2] = qj(p.mu2.kernel(g.x2(i2), w2));
      Quaternion acc;
      for (std::size_t i1 = 0; i1 < n1; ++i1) {
        Quaternion row;
        for (std::size_t i2 = 0; i2 < n2; ++i2) row += f(i1, i2) * k2[i2];
        acc += qi(p.mu1.kernel(g.x1(i1), w1)) * row;
      }
      out[static_cast<std::size_t>(t)] = acc * g.cell_area();
    }
  }
  return out;
}

QSignal2D inverse(const QSignal2D& spectrum, const QQPFTParams& p, const Grid2D& space, InverseMethod method) {
  if (method == InverseMethod::exact) return QQPFTPlan(space, p).inverse(spectrum);
  const Grid2D freq = induced_frequency_grid(space, p);
  require_grid(spectrum.grid(), freq, "inverse");
  const auto x1 = space.axis(1).coordinates();
  const auto x2 = space.axis(2).coordinates();
  const auto cols = transform_axis_direct(spectrum.samples(), freq.n1(), freq.n2(), 1,
                                          AxisKernel{p.mu1, Plane::i, Side::left}, Direction::inverse, freq.axis(1), x1);
  auto out = transform_axis_direct(cols, space.n1(), freq.n2(), 2, AxisKernel{p.mu2, Plane::j, Side::right},
                                   Direction::inverse, freq.axis(2), x2);
  return {space, std::move(out)};
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::two_sided: return "two";
    case Variant::right: return "right";
    case Variant::left: return "left";
    case Variant::two_sided_ji: return "two-ji";
    case Variant::left_ji: return "left-ji";
    case Variant::left_ji_conj: return "left-ji-conj";
  }
  return "?";
}

QSignal2D forward_sided(const QSignal2D& f, const QQPFTParams& p, Variant variant, Method method) {
  struct Step {
    int axis;
    Plane plane;
    Side side;
    bool conjugate;
  };
  Step first{}, second{};
  switch (variant) {
    case Variant::two_sided:
      first = {1, Plane::i, Side::left, false};
      second = {2, Plane::j, Side::right, false};
      break;
    case Variant::right:
      first = {1, Plane::i, Side::right, false};
      second = {2, Plane::j, Side::right, false};
      break;
    case Variant::left:
      first = {2, Plane::j, Side::left, false};
      second = {1, Plane::i, Side::left, false};
      break;
    case Variant::two_sided_ji:
      first = {2, Plane::j, Side::left, false};
      second = {1, Plane::i, Side::right, false};
      break;
    case Variant::left_ji:
      first = {1, Plane::i, Side::left, false};
      second = {2, Plane::j, Side::left, false};
      break;
    case Variant::left_ji_conj:
      first = {1, Plane::i, Side::left, true};
      second = {2, Plane::j, Side::left, false};
      break;
  }

  const Grid2D& space = f.grid();
  const Grid2D freq = induced_frequency_grid(space, p);
  const auto run = [&](std::span<const Quaternion> data, const Step& s) {
    const AxisKernel k{s.axis == 1 ? p.mu1 : p.mu2, s.plane, s.side, s.conjugate};
    const UniformAxis in = space.axis(s.axis);
    const UniformAxis out = freq.axis(s.axis);
    // the passing axis keeps its length, so the array stays n1 x n2
    if (method == Method::fast) {
      return transform_axis_fast(data, space.n1(), space.n2(), s.axis, k, Direction::forward, in, out);
    }
    const auto coords = out.coordinates();
    return transform_axis_direct(data, space.n1(), space.n2(), s.axis, k, Direction::forward, in, coords);
  };
  const auto mid = run(f.samples(), first);
  return {freq, run(mid, second)};
}

Quaternion gaussian_oracle(const QQPFTParams& p, double k1, double k2, std::array<double, 2> w) {
  if (!(k1 > 0.0) || !(k2 > 0.0)) throw std::invalid_argument("gaussian_oracle: k1 and k2 must be positive");
  const auto axis = [](const QPFTParams& mu, double k, double ws) {
    const std::complex<double> z{k, mu.a()};
    const double s = mu.b() * ws + mu.d();
    // sqrt(b unit / (2 z)) = sqrt_unit(b) sqrt(pi / z) / sqrt(2 pi); both roots principal with
    // arguments inside (-pi/4, pi/4], so their product is the principal root of the quotient
    return cis(-(mu.c() * ws * ws + mu.e() * ws)) * mu.constant() * std::sqrt(std::numbers::pi / z) *
           std::exp(-s * s / (4.0 * z));
  };
  return qi(axis(p.mu1, k1, w[0])) * qj(axis(p.mu2, k2, w[1]));
}

QQPFTParams special_case_qft() {
  const QPFTParams mu(0, -1, 0, 0, 0);
  return {mu, mu};
}

QQPFTParams special_case_qlct(double a, double b, double c) {
  if (b == 0.0) throw std::invalid_argument("special_case_qlct: b must be nonzero");
  const QPFTParams mu(a, b, c, 0, 0);
  return {mu, mu};
}

QQPFTParams special_case_frqft(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  if (!std::isfinite(theta) || std::fabs(s) < 1e-12) {
    throw std::invalid_argument("special_case_frqft: theta must not be a multiple of pi");
  }
  const double cot = std::fabs(c) < 1e-15 ? 0.0 : c / s;
  const QPFTParams mu(cot, -1.0 / s, cot, 0, 0);
  return {mu, mu};
}

// ---------------------------------------------------------------------------

VerificationReport verify_fast_vs_direct(const QSignal2D& f, const QQPFTParams& p) {
  return VerificationReport::make("fast_vs_direct", max_abs_diff(forward_fast(f, p), forward_direct(f, p)), 1e-10,
                                  describe(f.grid()), p.to_string());
}

VerificationReport verify_roundtrip(const QSignal2D& f, const QQPFTParams& p) {
  const QQPFTPlan plan(f.grid(), p);
  return VerificationReport::make("roundtrip", max_abs_diff(plan.inverse(plan.forward(f)), f), 1e-12,
                                  describe(f.grid()), p.to_string());
}

VerificationReport verify_parseval_norm(const QSignal2D& f, const QQPFTParams& p) {
  const double nf = l2_norm(f);
  const double nq = l2_norm(forward_fast(f, p));
  const double err = nf > 0.0 ? std::fabs(nq - nf) / nf : nq;
  auto r = VerificationReport::make("parseval_norm", err, 1e-10, describe(f.grid()), p.to_string());
  r.details["norm_signal"] = nf;
  r.details["norm_transform"] = nq;
  return r;
}

VerificationReport verify_parseval_inner(const QSignal2D& f, const QSignal2D& g, const QQPFTParams& p) {
  require_grid(g.grid(), f.grid(), "verify_parseval_inner");
  const QQPFTPlan plan(f.grid(), p);
  const QSignal2D tf = plan.forward(f);
  const QSignal2D tg = plan.forward(g);
  const double scale = std::fmax(std::fmax(energy(f), energy(g)), 1e-300);
  const double err = std::fabs(scalar_inner(f, g) - scalar_inner(tf, tg)) / scale;
  auto r = VerificationReport::make("parseval_inner", err, 1e-9, describe(f.grid()), p.to_string());
  r.details["quaternion_inner_rel_discrepancy"] = max_abs_diff(inner_product(f, g), inner_product(tf, tg)) / scale;
  return r;
}

VerificationReport verify_linearity(const QSignal2D& f, const QSignal2D& g, double alpha, double beta,
                                    const QQPFTParams& p) {
  const QSignal2D lhs = forward_direct(linear_combination(alpha, f, beta, g), p);
  const QSignal2D rhs = linear_combination(alpha, forward_direct(f, p), beta, forward_direct(g, p));
  auto r = VerificationReport::make("linearity", max_abs_diff(lhs, rhs), 1e-12, describe(f.grid()), p.to_string());
  r.details["alpha"] = alpha;
  r.details["beta"] = beta;
  return r;
}

VerificationReport verify_split_lemma(const QSignal2D& f, const QQPFTParams& p) {
  std::vector<Quaternion> fp(f.size()), fq(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto [a, b] = symplectic_split(f[k]);
    fp[k] = qi(a);
    fq[k] = qi(b);
  }
  const QSignal2D sp(f.grid(), std::move(fp)), sq(f.grid(), std::move(fq));
  const Quaternion j = Quaternion::unit_j();

  const QSignal2D two = forward_sided(f, p, Variant::two_sided);
  const QSignal2D rp = forward_sided(sp, p, Variant::right);
  const QSignal2D rq = forward_sided(sq, p, Variant::right);
  const QSignal2D right_form = linear_combination(1.0, rp, 1.0, multiply(Quaternion{1.0}, rq, j));

  const QSignal2D two_ji = forward_sided(f, p, Variant::two_sided_ji);
  const QSignal2D lp = forward_sided(sp, p, Variant::left_ji);
  const QSignal2D lq = forward_sided(sq, p, Variant::left_ji_conj);
  const QSignal2D left_form = linear_combination(1.0, lp, 1.0, multiply(Quaternion{1.0}, lq, j));

  const double e_right = max_abs_diff(two, right_form);
  const double e_left = max_abs_diff(two_ji, left_form);
  auto r = VerificationReport::make("split_lemma", std::fmax(e_right, e_left), 1e-10, describe(f.grid()),
                                    p.to_string());
  r.details["right_sided_form_error"] = e_right;
  r.details["left_sided_form_error"] = e_left;
  return r;
}

VerificationReport verify_qft_reduction(const QSignal2D& f) {
  for (const auto& q : f.samples())
    if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0) throw std::invalid_argument("verify_qft_reduction: f must be real");
  const QQPFTParams p = special_case_qft();
  const QSignal2D Q = forward_fast(f, p);
  const QSignal2D F = qft_fast(f);
  const std::size_t n1 = f.grid().n1(), n2 = f.grid().n2();
  double err = 0.0;
  for (std::size_t m1 = 0; m1 < n1; ++m1)
    for (std::size_t m2 = 0; m2 < n2; ++m2)
      err = std::fmax(err, std::fabs(norm(Q(m1, m2)) - norm(F((n1 - m1) % n1, (n2 - m2) % n2))));
  return VerificationReport::make("qft_reduction", err, 1e-10, describe(f.grid()), p.to_string());
}

VerificationReport verify_shift(const QSignal2D& f, const QQPFTParams& p, std::array<double, 2> k) {
  const Grid2D& g = f.grid();
  const long s1 = grid_offset(k[0], g.dx1(), "verify_shift");
  const long s2 = grid_offset(k[1], g.dx2(), "verify_shift");
  const QSignal2D shifted = shift_samples(f, s1, s2);
  const Grid2D freq = induced_frequency_grid(g, p);
  const QPFTParams& m1 = p.mu1;
  const QPFTParams& m2 = p.mu2;

  const auto w1 = freq.axis(1).coordinates();
  const auto w2 = freq.axis(2).coordinates();
  const auto w1s = offset_coordinates(freq.axis(1), 2.0 * m1.a() * k[0] / m1.b());
  const auto w2s = offset_coordinates(freq.axis(2), 2.0 * m2.a() * k[1] / m2.b());
  const auto lhs = forward_direct(shifted, p, w1, w2);
  const auto base = forward_direct(f, p, w1s, w2s);

  const auto phase = [](const QPFTParams& m, double ks, double w, bool printed) {
    const double a = m.a(), b = m.b(), c = m.c(), d = m.d(), e = m.e();
    const double last = printed ? 2.0 * a * ks / b : 2.0 * a * e * ks / b;
    return a * ks * ks + b * ks * w + d * ks - 4.0 * a * c * ks * w / b - 4.0 * a * a * c * ks * ks / (b * b) - last;
  };

  double mag = 0.0, full = 0.0, printed = 0.0;
  for (std::size_t m = 0; m < w1.size(); ++m) {
    for (std::size_t n = 0; n < w2.size(); ++n) {
      const std::size_t idx = m * w2.size() + n;
      mag = std::fmax(mag, std::fabs(norm(lhs[idx]) - norm(base[idx])));
      const Quaternion derived =
          exp_i(-phase(m1, k[0], w1[m], false)) * base[idx] * exp_j(-phase(m2, k[1], w2[n], false));
      const Quaternion as_printed =
          exp_i(-phase(m1, k[0], w1[m], true)) * base[idx] * exp_j(-phase(m2, k[1], w2[n], true));
      full = std::fmax(full, max_abs_diff(lhs[idx], derived));
      printed = std::fmax(printed, max_abs_diff(lhs[idx], as_printed));
    }
  }
  auto r = VerificationReport::make("shift", std::fmax(mag, full), 1e-8, describe(g), with_offsets(p, "k", k));
  r.details["magnitude_error"] = mag;
  r.details["phase_error"] = full;
  r.details["printed_phase_error"] = printed;
  return r;
}

QSignal2D modulate(const QSignal2D& f, std::array<double, 2> w0) {
  return chirp_multiply(chirp_multiply(f, Side::left, Plane::i, 0.0, w0[0], 0.0), Side::right, Plane::j, 0.0, w0[1],
                        0.0);
}

VerificationReport verify_modulation(const QSignal2D& f, const QQPFTParams& p, std::array<double, 2> w0) {
  const Grid2D& g = f.grid();
  const Grid2D freq = induced_frequency_grid(g, p);
  const QPFTParams& m1 = p.mu1;
  const QPFTParams& m2 = p.mu2;
  grid_offset(w0[0] / m1.b(), freq.dx1(), "verify_modulation");
  grid_offset(w0[1] / m2.b(), freq.dx2(), "verify_modulation");

  const auto w1 = freq.axis(1).coordinates();
  const auto w2 = freq.axis(2).coordinates();
  const auto w1s = offset_coordinates(freq.axis(1), -w0[0] / m1.b());
  const auto w2s = offset_coordinates(freq.axis(2), -w0[1] / m2.b());
  const auto lhs = forward_direct(modulate(f, w0), p, w1, w2);
  const auto base = forward_direct(f, p, w1s, w2s);

  const auto phase = [](const QPFTParams& m, double t, double w) {
    const double b = m.b();
    return m.c() * t * t / (b * b) - 2.0 * m.c() * t * w / b - m.e() * t / b;
  };

  double mag = 0.0, full = 0.0, printed = 0.0;
  for (std::size_t m = 0; m < w1.size(); ++m) {
    for (std::size_t n = 0; n < w2.size(); ++n) {
      const std::size_t idx = m * w2.size() + n;
      mag = std::fmax(mag, std::fabs(norm(lhs[idx]) - norm(base[idx])));
      const Quaternion left = exp_i(phase(m1, w0[0], w1[m]));
      const Quaternion derived = left * base[idx] * exp_j(phase(m2, w0[1], w2[n]));
      const Quaternion as_printed = left * base[idx] * exp_j(phase(m2, w0[0], w2[n]));
      full = std::fmax(full, max_abs_diff(lhs[idx], derived));
      printed = std::fmax(printed, max_abs_diff(lhs[idx], as_printed));
    }
  }
  auto r = VerificationReport::make("modulation", std::fmax(mag, full), 1e-8, describe(g), with_offsets(p, "w0", w0));
  r.details["magnitude_error"] = mag;
  r.details["phase_error"] = full;
  r.details["printed_phase_error"] = printed;
  return r;
}

}  // namespace qqpft
