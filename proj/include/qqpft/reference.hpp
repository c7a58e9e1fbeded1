#pragma once

#include "qqpft/qqpft.hpp"

/// Serial, unoptimized evaluations of the defining sums. Kept as oracles for
/// the parallel and fast kernels and as the baseline of the benchmark.
namespace qqpft::reference {

/// (1/2 pi) sum_x e^{-i x1 w1} f(x) e^{-j x2 w2} dx1 dx2 over the QFT grid, O(N^4).
QSignal2D qft_direct(const QSignal2D& f);

/// sum_x K^i(x1, w1) f(x) K^j(x2, w2) dx1 dx2 over the induced grid, O(N^4),
/// kernels recomputed per term.
QSignal2D forward_direct(const QSignal2D& f, const QQPFTParams& p);

}  // namespace qqpft::reference
