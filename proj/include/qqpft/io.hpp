#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "qqpft/signal.hpp"

namespace qqpft {

/// Malformed or unreadable file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QsigForm { text, binary };

/// QSIG text:   "QSIG2D 1", then "n1 n2 dx1 dx2 x1_0 x2_0", then one
///              "r x y z" line per sample (row-major), all %.17g.
/// QSIG binary: "QSGB", version byte 1, u32 n1, u32 n2, f64 dx1 dx2 x1_0 x2_0,
///              then n1*n2*4 f64 (r, x, y, z); little-endian throughout.
/// read_qsig detects the form from the first bytes.
QSignal2D read_qsig(std::istream& in);
QSignal2D read_qsig(const std::filesystem::path& path);
void write_qsig(const QSignal2D& f, std::ostream& out, QsigForm form);
void write_qsig(const QSignal2D& f, const std::filesystem::path& path, QsigForm form);

/// Binary PPM (P6, maxval 255). Row r, column c maps to sample (i1, i2) = (r, c)
/// with value (0, R/255, G/255, B/255) on a centered grid with unit spacing.
QSignal2D read_ppm(std::istream& in);
QSignal2D read_ppm(const std::filesystem::path& path);

struct PpmWriteResult {
  bool scalar_dropped = false;  // some sample had a nonzero scalar part
  bool clamped = false;         // some channel fell outside [0, 1]
};

PpmWriteResult write_ppm(const QSignal2D& f, std::ostream& out);
PpmWriteResult write_ppm(const QSignal2D& f, const std::filesystem::path& path);

/// Plain PBM (P1). The image must be n2 wide and n1 tall; 1 marks membership.
GridMask read_pbm(std::istream& in, const Grid2D& grid);
GridMask read_pbm(const std::filesystem::path& path, const Grid2D& grid);
void write_pbm(const GridMask& mask, std::ostream& out);
void write_pbm(const GridMask& mask, const std::filesystem::path& path);

}  // namespace qqpft
