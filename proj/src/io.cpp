#include "qqpft/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

namespace qqpft {

namespace {

constexpr char kTextTag[] = "QSIG2D";
constexpr char kBinaryMagic[4] = {'Q', 'S', 'G', 'B'};
constexpr std::uint8_t kVersion = 1;

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ostream& out, const char* what) {
  out.flush();
  if (!out) throw FormatError(std::string(what) + ": write failed");
}

Grid2D make_grid(std::uint64_t n1, std::uint64_t n2, double dx1, double dx2, double x1, double x2, const char* who) {
  if (!(dx1 > 0.0) || !(dx2 > 0.0)) throw FormatError(std::string(who) + ": spacings must be positive");
  try {
    return Grid2D(n1, n2, dx1, dx2, x1, x2);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(who) + ": " + e.what());
  }
}

// -- text -------------------------------------------------------------------

class Tokens {
 public:
  Tokens(std::string prefix, std::istream& in) : text_(std::move(prefix)) {
    text_.append(std::istreambuf_iterator<char>(in), {});
  }

  std::string_view next(const char* who) {
    skip_space();
    if (pos_ >= text_.size()) throw FormatError(std::string(who) + ": unexpected end of file");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string_view(text_).substr(start, pos_ - start);
  }

  template <class T>
  T number(const char* who) {
    const std::string_view t = next(who);
    T v{};
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
      throw FormatError(std::string(who) + ": bad number '" + std::string(t) + "'");
    return v;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

// `prefix` holds bytes already consumed while sniffing the format.
QSignal2D read_text(std::string prefix, std::istream& in) {
  Tokens t(std::move(prefix), in);
  if (t.next("qsig") != kTextTag) throw FormatError("qsig: bad magic");
  if (t.number<int>("qsig") != 1) throw FormatError("qsig: unsupported version");
  const auto n1 = t.number<std::uint64_t>("qsig");
  const auto n2 = t.number<std::uint64_t>("qsig");
  const double dx1 = t.number<double>("qsig"), dx2 = t.number<double>("qsig");
  const double x1 = t.number<double>("qsig"), x2 = t.number<double>("qsig");
  const Grid2D grid = make_grid(n1, n2, dx1, dx2, x1, x2, "qsig");
  std::vector<Quaternion> s(grid.size());
  for (auto& q : s) {
    try {
      q = {t.number<double>("qsig"), t.number<double>("qsig"), t.number<double>("qsig"), t.number<double>("qsig")};
    } catch (const FormatError&) {
      throw FormatError("qsig: truncated payload, expected " + std::to_string(grid.size()) + " samples");
    }
  }
  if (!t.at_end()) throw FormatError("qsig: trailing data after payload");
  return {grid, std::move(s)};
}

void write_text(const QSignal2D& f, std::ostream& out) {
  const Grid2D& g = f.grid();
  char line[160];
  out << kTextTag << " 1\n";
  std::snprintf(line, sizeof line, "%zu %zu %.17g %.17g %.17g %.17g\n", g.n1(), g.n2(), g.dx1(), g.dx2(), g.x1_0(),
                g.x2_0());
  out << line;
  for (const auto& q : f.samples()) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g\n", q.r, q.x, q.y, q.z);
    out << line;
  }
}

// -- binary -----------------------------------------------------------------

template <class U>
U to_little(U v) {
  if constexpr (std::endian::native == std::endian::big) {
    U r = 0;
    for (std::size_t k = 0; k < sizeof(U); ++k) r = (r << 8) | ((v >> (8 * k)) & 0xff);
    return r;
  }
  return v;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), 4);
}

void put_f64(std::ostream& out, double d) {
  const std::uint64_t v = to_little(std::bit_cast<std::uint64_t>(d));
  out.write(reinterpret_cast<const char*>(&v), 8);
}

void get(std::istream& in, void* dst, std::size_t n, const char* what) {
  in.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(in.gcount()) != n) throw FormatError(std::string("qsig: truncated ") + what);
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v;
  get(in, &v, 4, "header");
  return to_little(v);
}

double get_f64(std::istream& in, const char* what) {
  std::uint64_t v;
  get(in, &v, 8, what);
  return std::bit_cast<double>(to_little(v));
}

// Reads everything after the magic bytes.
QSignal2D read_binary(std::istream& in) {
  std::uint8_t version;
  get(in, &version, 1, "header");
  if (version != kVersion) throw FormatError("qsig: unsupported version " + std::to_string(version));
  const std::uint32_t n1 = get_u32(in), n2 = get_u32(in);
  const double dx1 = get_f64(in, "header"), dx2 = get_f64(in, "header");
  const double x1 = get_f64(in, "header"), x2 = get_f64(in, "header");
  const Grid2D grid = make_grid(n1, n2, dx1, dx2, x1, x2, "qsig");
  std::vector<Quaternion> s(grid.size());
  for (auto& q : s) {
    q.r = get_f64(in, "payload");
    q.x = get_f64(in, "payload");
    q.y = get_f64(in, "payload");
    q.z = get_f64(in, "payload");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("qsig: trailing data after payload");
  return {grid, std::move(s)};
}

void write_binary(const QSignal2D& f, std::ostream& out) {
  const Grid2D& g = f.grid();
  if (g.n1() > UINT32_MAX || g.n2() > UINT32_MAX) throw FormatError("qsig: grid too large for the binary form");
  out.write(kBinaryMagic, 4);
  out.put(static_cast<char>(kVersion));
  put_u32(out, static_cast<std::uint32_t>(g.n1()));
  put_u32(out, static_cast<std::uint32_t>(g.n2()));
  for (double d : {g.dx1(), g.dx2(), g.x1_0(), g.x2_0()}) put_f64(out, d);
  for (const auto& q : f.samples())
    for (double d : {q.r, q.x, q.y, q.z}) put_f64(out, d);
}

// -- netpbm -----------------------------------------------------------------

// Header token of a netpbm file; '#' starts a comment running to end of line.
std::string pnm_token(std::istream& in, const char* who) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) throw FormatError(std::string(who) + ": unexpected end of file");
  return tok;
}

std::size_t pnm_size(std::istream& in, const char* who) {
  const std::string t = pnm_token(in, who);
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) throw FormatError(std::string(who) + ": bad header field " + t);
  return v;
}

}  // namespace

QSignal2D read_qsig(std::istream& in) {
  char head[4] = {};
  in.read(head, 4);
  const auto got = static_cast<std::size_t>(in.gcount());
  if (got == 4 && std::memcmp(head, kBinaryMagic, 4) == 0) return read_binary(in);
  in.clear();
  return read_text(std::string(head, got), in);
}

QSignal2D read_qsig(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_qsig(in);
}

void write_qsig(const QSignal2D& f, std::ostream& out, QsigForm form) {
  if (form == QsigForm::text)
    write_text(f, out);
  else
    write_binary(f, out);
  finish(out, "qsig");
}

void write_qsig(const QSignal2D& f, const std::filesystem::path& path, QsigForm form) {
  auto out = open_out(path);
  write_qsig(f, out, form);
}

QSignal2D read_ppm(std::istream& in) {
  if (pnm_token(in, "ppm") != "P6") throw FormatError("ppm: only binary P6 images are supported");
  const std::size_t width = pnm_size(in, "ppm");
  const std::size_t height = pnm_size(in, "ppm");
  if (pnm_size(in, "ppm") != 255) throw FormatError("ppm: maxval must be 255");
  if (width % 2 != 0 || height % 2 != 0 || width == 0 || height == 0)
    throw FormatError("ppm: width and height must be even and nonzero");
  std::vector<unsigned char> raw(width * height * 3);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) throw FormatError("ppm: truncated pixel data");
  const Grid2D grid = Grid2D::centered(height, width, static_cast<double>(height), static_cast<double>(width));
  std::vector<Quaternion> s(grid.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    s[k] = {0.0, raw[3 * k] / 255.0, raw[3 * k + 1] / 255.0, raw[3 * k + 2] / 255.0};
  return {grid, std::move(s)};
}

QSignal2D read_ppm(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_ppm(in);
}

PpmWriteResult write_ppm(const QSignal2D& f, std::ostream& out) {
  const Grid2D& g = f.grid();
  PpmWriteResult result;
  out << "P6\n" << g.n2() << ' ' << g.n1() << "\n255\n";
  std::vector<unsigned char> raw(g.size() * 3);
  auto channel = [&](double v) {
    if (!(v >= 0.0 && v <= 1.0)) result.clamped = true;
    const double c = std::isnan(v) ? 0.0 : std::clamp(v, 0.0, 1.0);
    return static_cast<unsigned char>(std::lround(c * 255.0));
  };
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Quaternion& q = f[k];
    if (q.r != 0.0) result.scalar_dropped = true;
    raw[3 * k] = channel(q.x);
    raw[3 * k + 1] = channel(q.y);
    raw[3 * k + 2] = channel(q.z);
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  finish(out, "ppm");
  return result;
}

PpmWriteResult write_ppm(const QSignal2D& f, const std::filesystem::path& path) {
  auto out = open_out(path);
  return write_ppm(f, out);
}

GridMask read_pbm(std::istream& in, const Grid2D& grid) {
  if (pnm_token(in, "pbm") != "P1") throw FormatError("pbm: only plain P1 masks are supported");
  const std::size_t width = pnm_size(in, "pbm");
  const std::size_t height = pnm_size(in, "pbm");
  if (width != grid.n2() || height != grid.n1())
    throw FormatError("pbm: mask is " + std::to_string(width) + "x" + std::to_string(height) + ", grid needs " +
                      std::to_string(grid.n2()) + "x" + std::to_string(grid.n1()));
  std::vector<std::uint8_t> bits;
  bits.reserve(grid.size());
  int c;
  while (bits.size() < grid.size() && (c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
    } else if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else if (!std::isspace(c)) {
      throw FormatError("pbm: unexpected character in pixel data");
    }
  }
  if (bits.size() != grid.size()) throw FormatError("pbm: truncated pixel data");
  return {grid, std::move(bits)};
}

GridMask read_pbm(const std::filesystem::path& path, const Grid2D& grid) {
  auto in = open_in(path);
  return read_pbm(in, grid);
}

void write_pbm(const GridMask& mask, std::ostream& out) {
  const Grid2D& g = mask.grid();
  out << "P1\n" << g.n2() << ' ' << g.n1() << '\n';
  for (std::size_t i1 = 0; i1 < g.n1(); ++i1) {
    for (std::size_t i2 = 0; i2 < g.n2(); ++i2) out << (i2 ? " " : "") << (mask(i1, i2) ? '1' : '0');
    out << '\n';
  }
  finish(out, "pbm");
}

void write_pbm(const GridMask& mask, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_pbm(mask, out);
}

}  // namespace qqpft
