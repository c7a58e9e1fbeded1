#pragma once

#include "qqpft/signal.hpp"

namespace qqpft {

/// Centered angular-frequency grid of a space grid:
/// w_m = 2 pi (m - n/2) / (n dx) per axis, spanning [-pi/dx, pi/dx).
Grid2D qft_frequency_grid(const Grid2D& space);

/// Two-sided quaternion Fourier transform
///   F(w) = 1/(2 pi) sum_x e^{-i x1 w1} f(x) e^{-j x2 w2} dx1 dx2
/// by direct summation over all samples, O(N^4). Parallel over outputs.
QSignal2D qft_direct(const QSignal2D& f);

/// Same values as qft_direct in O(N^2 log N) through the symplectic split
/// and complex FFTs.
QSignal2D qft_fast(const QSignal2D& f);

/// Exact discrete inverse of qft_fast onto `space`:
///   f(x) = 1/(2 pi) sum_w e^{+i x1 w1} F(w) e^{+j x2 w2} dw1 dw2.
/// Throws std::invalid_argument unless F lives on qft_frequency_grid(space).
QSignal2D iqft(const QSignal2D& spectrum, const Grid2D& space);

}  // namespace qqpft
