#pragma once

#include <map>
#include <string>

#include "qqpft/qqpft.hpp"
#include "qqpft/signal.hpp"

namespace qqpft {

enum class BoundKind { ratio, slack, diagnostic };

std::string to_string(BoundKind kind);

/// One uncertainty inequality evaluated on a sampled signal.
///   ratio:      value = lhs / rhs, pass <=> value >= 1 - tolerance
///   slack:      value = normalized (lhs - rhs) or (rhs - lhs), pass <=> value >= -tolerance
///   diagnostic: pass carries the documented criterion of the check
/// Reports with asserted == false are informational: their pass flag does not
/// count as a verification failure.
struct UPReport {
  std::string name;
  BoundKind kind = BoundKind::ratio;
  double lhs = 0.0;
  double rhs = 0.0;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool asserted = true;
  double b1 = 0.0;
  double b2 = 0.0;
  std::string constant;
  std::string grid;
  std::map<std::string, double> extra;
};

/// int x_s^2 |f|^2 * int w_s^2 |Q[f]|^2 against (int |f|^2)^2 / (4 b_s^2); axis is 1 or 2.
UPReport heisenberg_ratio(const QSignal2D& f, const QQPFTParams& p, int axis);
UPReport heisenberg_ratio(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, int axis);

/// int |x|^2 |f|^2 * int |w|^2 |Q[f]|^2 against (int |f|^2)^2 / (b1^2 + b2^2).
UPReport directional_ratio(const QSignal2D& f, const QQPFTParams& p);
UPReport directional_ratio(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p);

enum class LogConstant { paper, corrected };

/// ln(2 pi^2) - 2 psi(1/2) and psi(1/2) + ln 2.
double log_constant(LogConstant c);

/// int ln|x| |f|^2 + int ln|w| |Q[f]|^2 against (D - ln|b1|) int |f|^2, with
/// value = (lhs - rhs) / int |f|^2 and tolerance 1e-4. Requires b1 == b2.
/// LogConstant::paper is reported with asserted = false.
UPReport log_up_slack(const QSignal2D& f, const QQPFTParams& p, LogConstant c);
UPReport log_up_slack(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, LogConstant c);

/// |E1| |E2| against 2 pi / |b1 b2| * max(0, 1 - eps1 - eps2)^2, where eps are
/// the energy fractions (square-rooted) of f outside E1 and of Q[f] outside E2.
/// E1 lives on the space grid, E2 on the induced frequency grid.
UPReport donoho_stark_check(const QSignal2D& f, const QQPFTParams& p, const GridMask& e1, const GridMask& e2);
UPReport donoho_stark_check(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p,
                            const GridMask& e1, const GridMask& e2);

/// ||Q[f]||_q <= (2 pi)^{1/q - 1/p} |b1 b2|^{1/2 - 1/q} ||f||_p for 1 <= p <= 2,
/// value = 1 - lhs / rhs, tolerance 1e-9.
UPReport hausdorff_young_slack(const QSignal2D& f, const QQPFTParams& p, double pp);
UPReport hausdorff_young_slack(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p, double pp);

struct DecayFit {
  double alpha = 0.0;
  double c = 0.0;
  double r2 = 0.0;
  std::size_t samples = 0;
};

/// Least-squares fit ln|g| = ln c - alpha ((s1 x1)^2 + (s2 x2)^2) over samples
/// with |g| > 1e-12 max|g|. Throws with fewer than 100 such samples.
DecayFit decay_rate_fit(const QSignal2D& g, double scale1 = 1.0, double scale2 = 1.0);

/// Fits alpha to f and beta to w -> Q[f](w / b), i.e. on the b-scaled
/// frequency coordinates. value = alpha * beta; pass <=> |alpha beta - 1/4| <= 1e-4
/// and both fits have r2 > 1 - 1e-8. Not asserted.
UPReport hardy_diagnostic(const QSignal2D& f, const QQPFTParams& p);
UPReport hardy_diagnostic(const QSignal2D& f, const QSignal2D& spectrum, const QQPFTParams& p);

}  // namespace qqpft
