#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qqpft/qpft1d.hpp"
#include "qqpft/report.hpp"
#include "qqpft/signal.hpp"

namespace qqpft {

/// Per-axis parameters: mu1 drives the i-kernel on x1, mu2 the j-kernel on x2.
struct QQPFTParams {
  QPFTParams mu1;
  QPFTParams mu2;

  std::string to_string() const;
  friend bool operator==(const QQPFTParams&, const QQPFTParams&) = default;
};

/// Frequency grid of the fast transform: per axis w_m = (m - n/2) * 2 pi / (n dx |b|).
/// Stored ascending for either sign of b.
Grid2D induced_frequency_grid(const Grid2D& space, const QQPFTParams& p);

/// Precomputed chirps and constants of the chirp-FFT-chirp factorization
///   Q[f](w) = e^{-i(c1 w1^2 + e1 w1)} F[G](b w) e^{-j(c2 w2^2 + e2 w2)},
///   G(x) = sqrt(b1 i) e^{-i(a1 x1^2 + d1 x1)} f(x) e^{-j(a2 x2^2 + d2 x2)} sqrt(b2 j),
/// F being the two-sided QFT. Immutable; shareable between threads.
class QQPFTPlan {
 public:
  QQPFTPlan(const Grid2D& space, const QQPFTParams& params);

  const Grid2D& space() const { return space_; }
  const Grid2D& frequency() const { return frequency_; }
  const QQPFTParams& params() const { return params_; }

  /// O(N^2 log N) transform onto frequency().
  QSignal2D forward(const QSignal2D& f) const;

  /// Undoes forward() step by step; exact to rounding.
  QSignal2D inverse(const QSignal2D& spectrum) const;

 private:
  Grid2D space_;
  Grid2D frequency_;
  QQPFTParams params_;
  std::vector<ComplexI> in_left_;    // sqrt(b1 i) e^{-i(a1 x1^2 + d1 x1)}
  std::vector<ComplexI> in_right_;   // e^{-j(a2 x2^2 + d2 x2)} sqrt(b2 j)
  std::vector<ComplexI> out_left_;   // e^{-i(c1 w1^2 + e1 w1)}
  std::vector<ComplexI> out_right_;  // e^{-j(c2 w2^2 + e2 w2)}
};

QSignal2D forward_fast(const QSignal2D& f, const QQPFTParams& p);

/// sum K^i(x1, w1) f(x) K^j(x2, w2) dx1 dx2 by direct quadrature on the
/// induced grid. The sum is carried out one axis at a time (O(N^3)).
QSignal2D forward_direct(const QSignal2D& f, const QQPFTParams& p);

/// Direct quadrature on the tensor product w1s x w2s; row-major result.
std::vector<Quaternion> forward_direct(const QSignal2D& f, const QQPFTParams& p, std::span<const double> w1s,
                                       std::span<const double> w2s);

/// Direct quadrature at arbitrary frequency points; O(N^2) per point.
std::vector<Quaternion> forward_direct(const QSignal2D& f, const QQPFTParams& p,
                                       std::span<const std::array<double, 2>> points);

enum class InverseMethod { exact, direct };

/// exact: algebraic inverse of forward_fast. direct: quadrature
/// sum conj(K^i) F conj(K^j) dw1 dw2 onto `space`. The spectrum must live on
/// induced_frequency_grid(space, p).
QSignal2D inverse(const QSignal2D& spectrum, const QQPFTParams& p, const Grid2D& space,
                  InverseMethod method = InverseMethod::exact);

/// Kernel placement relative to the signal.
enum class Variant {
  two_sided,     // K^i f K^j
  right,         // f K^i K^j
  left,          // K^i K^j f
  two_sided_ji,  // K^j f K^i
  left_ji,       // K^j K^i f
  left_ji_conj,  // K^j conj(K^i) f
};

std::string to_string(Variant v);

/// Any kernel placement, evaluated on the induced grid by direct quadrature
/// or by one FFT per line.
QSignal2D forward_sided(const QSignal2D& f, const QQPFTParams& p, Variant variant, Method method = Method::direct);

/// Closed-form transform of exp(-(k1 x1^2 + k2 x2^2)):
///   e^{-i(c1 w1^2 + e1 w1)} sqrt(b1 i / (2(k1 + i a1))) e^{-(b1 w1 + d1)^2 / (4(k1 + i a1))}
///   * e^{-j(c2 w2^2 + e2 w2)} sqrt(b2 j / (2(k2 + j a2))) e^{-(b2 w2 + d2)^2 / (4(k2 + j a2))}
/// with the first factor in the i-plane and the second in the j-plane.
Quaternion gaussian_oracle(const QQPFTParams& p, double k1, double k2, std::array<double, 2> w);

/// QFT: (0, -1, 0, 0, 0) per axis. QLCT: (a, b, c, 0, 0). FrQFT: (cot t, -csc t, cot t, 0, 0),
/// with cot t taken as exactly 0 when |cos t| < 1e-15.
QQPFTParams special_case_qft();
QQPFTParams special_case_qlct(double a, double b, double c);
QQPFTParams special_case_frqft(double theta);

// ---------------------------------------------------------------------------
// Identity checks

/// forward_fast against forward_direct; tolerance 1e-10.
VerificationReport verify_fast_vs_direct(const QSignal2D& f, const QQPFTParams& p);

/// inverse(forward_fast(f), exact) against f; tolerance 1e-12.
VerificationReport verify_roundtrip(const QSignal2D& f, const QQPFTParams& p);

/// | ||Q[f]|| - ||f|| | / ||f||; tolerance 1e-10.
VerificationReport verify_parseval_norm(const QSignal2D& f, const QQPFTParams& p);

/// Scalar inner-product discrepancy relative to max(||f||^2, ||g||^2); tolerance
/// 1e-9. The full quaternion inner-product discrepancy is recorded in details only.
VerificationReport verify_parseval_inner(const QSignal2D& f, const QSignal2D& g, const QQPFTParams& p);

/// Q[alpha f + beta g] against alpha Q[f] + beta Q[g] for real alpha, beta; 1e-12.
VerificationReport verify_linearity(const QSignal2D& f, const QSignal2D& g, double alpha, double beta,
                                    const QQPFTParams& p);

/// K^i f K^j = R[f_p] + R[f_q] j  and  K^j f K^i = L^{j,i}[f_p] + L^{j,-i}[f_q] j
/// for f = f_p + f_q j; tolerance 1e-10.
VerificationReport verify_split_lemma(const QSignal2D& f, const QQPFTParams& p);

/// Shift by k = (s1 dx1, s2 dx2):
///   Q[f(. - k)](w) = e^{-i R1} Q[f](w + 2 a k / b) e^{-j R2},
///   R = a k^2 + b k w + d k - 4 a c k w / b - 4 a^2 c k^2 / b^2 - 2 a e k / b.
/// max_abs_error is the larger of the magnitude and full-phase errors
/// (tolerance 1e-8). details also carry the error of the phase with the
/// e factor dropped from the last term. Throws unless k is on the grid.
VerificationReport verify_shift(const QSignal2D& f, const QQPFTParams& p, std::array<double, 2> k);

/// Modulation M f = e^{i x1 u0} f e^{j x2 v0}:
///   Q[M f](w) = e^{i P1} Q[f](w - w0 / b) e^{j P2},
///   P_s = c_s t_s^2 / b_s^2 - 2 c_s t_s w_s / b_s - e_s t_s / b_s,  t = (u0, v0).
/// Same reporting as verify_shift; details carry the error of the phase with
/// u0 in place of v0 on the j side. Throws unless w0 / b is a multiple of the
/// induced frequency spacing.
VerificationReport verify_modulation(const QSignal2D& f, const QQPFTParams& p, std::array<double, 2> w0);

/// For real-valued f: |Q[f](w)| with special_case_qft() parameters against
/// |qft_fast(f)(-w)|, the reflection taken on the periodic index grid
/// (m -> (n - m) mod n); tolerance 1e-10. Throws unless f is real.
VerificationReport verify_qft_reduction(const QSignal2D& f);

/// Modulated copy e^{i x1 u0} f e^{j x2 v0}.
QSignal2D modulate(const QSignal2D& f, std::array<double, 2> w0);

}  // namespace qqpft
