#include "qqpft/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qqpft {

namespace {

void check_spectrum(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, const char* who) {
  if (!(spectrum.grid() == induced_frequency_grid(f.grid(), p)))
    throw std::invalid_argument(std::string(who) + ": spectrum is not on the induced frequency grid");
}

double nonzero_energy(const QSignal2D& f, const char* who) {
  const double e = energy(f);
  if (!(e > 0.0)) throw std::invalid_argument(std::string(who) + ": zero signal");
  return e;
}

UPReport base(std::string name, BoundKind kind, double tolerance, const QSignal2D& f, const QQPFTParams& p) {
  UPReport r;
  r.name = std::move(name);
  r.kind = kind;
  r.tolerance = tolerance;
  r.b1 = p.mu1.b();
  r.b2 = p.mu2.b();
  r.grid = describe(f.grid());
  return r;
}

void finish_ratio(UPReport& r) {
  r.value = r.lhs / r.rhs;
  r.pass = r.value >= 1.0 - r.tolerance;
}

constexpr double kRatioTol = 1e-6;

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::ratio: return "ratio";
    case BoundKind::slack: return "slack";
    case BoundKind::diagnostic: return "diagnostic";
  }
  return "?";
}

UPReport heisenberg_ratio(const QSignal2D& f, const QQPFTParams& p, int axis) {
  return heisenberg_ratio(f, forward_fast(f, p), p, axis);
}

UPReport heisenberg_ratio(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("heisenberg_ratio: axis must be 1 or 2");
  check_spectrum(f, spectrum, p, "heisenberg_ratio");
  const double e = nonzero_energy(f, "heisenberg_ratio");
  const double b = axis == 1 ? p.mu1.b() : p.mu2.b();
  UPReport r = base("heisenberg_x" + std::to_string(axis), BoundKind::ratio, kRatioTol, f, p);
  r.constant = "1/(4 b" + std::to_string(axis) + "^2)";
  const double spread_x = moment(f, MomentKind::axis_spread, axis);
  const double spread_w = moment(spectrum, MomentKind::axis_spread, axis);
  r.lhs = spread_x * spread_w;
  r.rhs = e * e / (4.0 * b * b);
  r.extra = {{"spatial_spread", spread_x}, {"spectral_spread", spread_w}, {"energy", e}};
  finish_ratio(r);
  return r;
}

UPReport directional_ratio(const QSignal2D& f, const QQPFTParams& p) {
  return directional_ratio(f, forward_fast(f, p), p);
}

UPReport directional_ratio(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p) {
  check_spectrum(f, spectrum, p, "directional_ratio");
  const double e = nonzero_energy(f, "directional_ratio");
  UPReport r = base("directional", BoundKind::ratio, kRatioTol, f, p);
  const double b_sq = p.mu1.b() * p.mu1.b() + p.mu2.b() * p.mu2.b();
  r.constant = "|b|^2 = b1^2 + b2^2";
  const double spread_x = moment(f, MomentKind::radial);
  const double spread_w = moment(spectrum, MomentKind::radial);
  r.lhs = spread_x * spread_w;
  r.rhs = e * e / b_sq;
  r.extra = {{"spatial_spread", spread_x}, {"spectral_spread", spread_w}, {"energy", e}, {"b_squared", b_sq}};
  finish_ratio(r);
  return r;
}

double log_constant(LogConstant c) {
  const double psi_half = -std::numbers::egamma - 2.0 * std::numbers::ln2;
  if (c == LogConstant::paper) return std::log(2.0 * std::numbers::pi * std::numbers::pi) - 2.0 * psi_half;
  return psi_half + std::numbers::ln2;
}

UPReport log_up_slack(const QSignal2D& f, const QQPFTParams& p, LogConstant c) {
  return log_up_slack(f, forward_fast(f, p), p, c);
}

UPReport log_up_slack(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, LogConstant c) {
  if (p.mu1.b() != p.mu2.b()) throw std::invalid_argument("log_up_slack: requires b1 == b2");
  check_spectrum(f, spectrum, p, "log_up_slack");
  const double e = nonzero_energy(f, "log_up_slack");
  const bool paper = c == LogConstant::paper;
  UPReport r = base(paper ? "logarithmic_paper_constant" : "logarithmic", BoundKind::slack, 1e-4, f, p);
  r.asserted = !paper;
  const double d = log_constant(c);
  r.constant = paper ? "D = ln(2 pi^2) - 2 psi(1/2)" : "D = psi(1/2) + ln 2";
  const double log_x = moment(f, MomentKind::log_radial);
  const double log_w = moment(spectrum, MomentKind::log_radial);
  r.lhs = log_x + log_w;
  r.rhs = (d - std::log(std::fabs(p.mu1.b()))) * e;
  r.value = (r.lhs - r.rhs) / e;
  r.pass = r.value >= -r.tolerance;
  r.extra = {{"D", d}, {"spatial_log_moment", log_x}, {"spectral_log_moment", log_w}, {"energy", e}};
  return r;
}

UPReport donoho_stark_check(const QSignal2D& f, const QQPFTParams& p, const GridMask& e1, const GridMask& e2) {
  return donoho_stark_check(f, forward_fast(f, p), p, e1, e2);
}

UPReport donoho_stark_check(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p,
                            const GridMask& e1, const GridMask& e2) {
  check_spectrum(f, spectrum, p, "donoho_stark_check");
  nonzero_energy(f, "donoho_stark_check");
  if (!(e1.grid() == f.grid())) throw std::invalid_argument("donoho_stark_check: E1 must be on the space grid");
  if (!(e2.grid() == spectrum.grid()))
    throw std::invalid_argument("donoho_stark_check: E2 must be on the frequency grid");
  UPReport r = base("donoho_stark", BoundKind::slack, 1e-12, f, p);
  r.constant = "2 pi / |b1 b2|";
  const double eps1 = concentration_epsilon(f, e1);
  const double eps2 = concentration_epsilon(spectrum, e2);
  const double m = std::max(0.0, 1.0 - eps1 - eps2);
  r.lhs = e1.measure() * e2.measure();
  r.rhs = 2.0 * std::numbers::pi / std::fabs(p.mu1.b() * p.mu2.b()) * m * m;
  r.value = r.lhs - r.rhs;
  r.pass = r.value >= -r.tolerance * std::max(1.0, r.rhs);
  r.extra = {{"epsilon1", eps1}, {"epsilon2", eps2}, {"measure1", e1.measure()}, {"measure2", e2.measure()}};
  return r;
}

UPReport hausdorff_young_slack(const QSignal2D& f, const QQPFTParams& p, double pp) {
  return hausdorff_young_slack(f, forward_fast(f, p), p, pp);
}

UPReport hausdorff_young_slack(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, double pp) {
  if (!(pp >= 1.0 && pp <= 2.0)) throw std::invalid_argument("hausdorff_young_slack: p must lie in [1, 2]");
  check_spectrum(f, spectrum, p, "hausdorff_young_slack");
  nonzero_energy(f, "hausdorff_young_slack");
  const double inv_p = 1.0 / pp;
  const double inv_q = 1.0 - inv_p;
  const double q = inv_q == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / inv_q;
  char label[48];
  std::snprintf(label, sizeof label, "hausdorff_young_p%.6g", pp);
  UPReport r = base(label, BoundKind::slack, 1e-9, f, p);
  r.constant = "(2 pi)^(1/q - 1/p) |b1 b2|^(1/2 - 1/q)";
  r.lhs = lp_norm(spectrum, q);
  r.rhs = std::pow(2.0 * std::numbers::pi, inv_q - inv_p) * std::pow(std::fabs(p.mu1.b() * p.mu2.b()), 0.5 - inv_q) *
          lp_norm(f, pp);
  r.value = 1.0 - r.lhs / r.rhs;
  r.pass = r.value >= -r.tolerance;
  r.extra = {{"p", pp}, {"q", q}};
  return r;
}

DecayFit decay_rate_fit(const QSignal2D& g, double scale1, double scale2) {
  const auto& grid = g.grid();
  double peak = 0.0;
  for (const auto& q : g.samples()) peak = std::max(peak, norm(q));
  const double floor = 1e-12 * peak;
  std::vector<double> t, y;
  for (std::size_t i1 = 0; i1 < grid.n1(); ++i1) {
    const double u1 = scale1 * grid.x1(i1);
    for (std::size_t i2 = 0; i2 < grid.n2(); ++i2) {
      const double m = norm(g(i1, i2));
      if (!(m > floor)) continue;
      const double u2 = scale2 * grid.x2(i2);
      t.push_back(u1 * u1 + u2 * u2);
      y.push_back(std::log(m));
    }
  }
  if (t.size() < 100) throw std::invalid_argument("decay_rate_fit: fewer than 100 samples above 1e-12 max|g|");
  const double n = static_cast<double>(t.size());
  double mt = 0.0, my = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    mt += t[k];
    my += y[k];
  }
  mt /= n;
  my /= n;
  double stt = 0.0, sty = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double dt = t[k] - mt, dy = y[k] - my;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (!(stt > 0.0)) throw std::invalid_argument("decay_rate_fit: degenerate support");
  const double slope = sty / stt;
  DecayFit fit;
  fit.alpha = -slope;
  fit.c = std::exp(my - slope * mt);
  fit.r2 = syy > 0.0 ? sty * sty / (stt * syy) : 1.0;
  fit.samples = t.size();
  return fit;
}

UPReport hardy_diagnostic(const QSignal2D& f, const QQPFTParams& p) {
  return hardy_diagnostic(f, forward_fast(f, p), p);
}

UPReport hardy_diagnostic(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p) {
  check_spectrum(f, spectrum, p, "hardy_diagnostic");
  nonzero_energy(f, "hardy_diagnostic");
  UPReport r = base("hardy_decay", BoundKind::diagnostic, 1e-4, f, p);
  r.asserted = false;
  r.constant = "alpha beta = 1/4";
  const DecayFit a = decay_rate_fit(f);
  const DecayFit b = decay_rate_fit(spectrum, std::fabs(p.mu1.b()), std::fabs(p.mu2.b()));
  r.lhs = a.alpha * b.alpha;
  r.rhs = 0.25;
  r.value = r.lhs;
  r.pass = std::fabs(r.lhs - 0.25) <= r.tolerance && a.r2 > 1.0 - 1e-8 && b.r2 > 1.0 - 1e-8;
  r.extra = {{"alpha", a.alpha}, {"beta", b.alpha}, {"r2_space", a.r2}, {"r2_frequency", b.r2}};
  return r;
}

}  // namespace qqpft
