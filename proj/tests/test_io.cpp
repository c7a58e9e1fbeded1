#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <cstring>
#include <sstream>

#include "qqpft/io.hpp"
#include "test_support.hpp"

using namespace qqpft;

namespace {

const std::filesystem::path data_dir = QQPFT_TEST_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool bit_equal(const QSignal2D& a, const QSignal2D& b) {
  if (!(a.grid() == b.grid())) return false;
  return std::memcmp(a.samples().data(), b.samples().data(), a.size() * sizeof(Quaternion)) == 0;
}

QSignal2D sample_signal() {
  return sample_function(Grid2D(6, 4, 0.3, 1.7, -0.9, -3.4), RandomSmoothSpec{11});
}

}  // namespace

TEST(Qsig, BinaryGoldenRoundTripsBitExactly) {
  const QSignal2D f = read_qsig(data_dir / "sample.qsgb");
  EXPECT_EQ(f.grid(), Grid2D(4, 2, 1.0, 0.5, -2.0, -0.5));
  EXPECT_EQ(f(2, 1).z, 4.9406564584124654e-324);
  std::ostringstream out;
  write_qsig(f, out, QsigForm::binary);
  EXPECT_EQ(out.str(), slurp(data_dir / "sample.qsgb"));
}

TEST(Qsig, TextGoldenRoundTripsBitExactly) {
  const QSignal2D f = read_qsig(data_dir / "sample.qsig");
  EXPECT_TRUE(bit_equal(f, read_qsig(data_dir / "sample.qsgb")));
  std::ostringstream out;
  write_qsig(f, out, QsigForm::text);
  EXPECT_EQ(out.str(), slurp(data_dir / "sample.qsig"));
}

TEST(Qsig, WriteThenReadIsLossless) {
  const QSignal2D f = sample_signal();
  for (QsigForm form : {QsigForm::binary, QsigForm::text}) {
    std::stringstream s;
    write_qsig(f, s, form);
    EXPECT_TRUE(bit_equal(read_qsig(s), f));
  }
}

TEST(Qsig, TextHeaderParsesToGrid) {
  std::istringstream in("QSIG2D 1\n4 2 1.0 1.0 -2.0 -1.0\n" + std::string(8 * 8, ' ') +
                        "0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n1 2 3 4\n");
  const QSignal2D f = read_qsig(in);
  EXPECT_EQ(f.grid(), Grid2D(4, 2, 1.0, 1.0, -2.0, -1.0));
  EXPECT_EQ(f(3, 1), (Quaternion{1, 2, 3, 4}));
}

TEST(Qsig, Errors) {
  auto fails = [](std::string text) {
    std::istringstream in(text);
    EXPECT_THROW(read_qsig(in), FormatError) << text;
  };
  fails("QSIG2D 2\n2 2 1 1 -1 -1\n");
  fails("QSIGXX 1\n");
  fails("QSIG2D 1\n4 2 1.0 1.0 -2.0 -1.0\n0 0 0 0\n");
  fails("QSIG2D 1\n2 2 0 1 -1 -1\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n");
  fails("QSIG2D 1\n2 2 1 1 -1 -1\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n5\n");
  fails("");

  std::string bin = slurp(data_dir / "sample.qsgb");
  fails(bin.substr(0, bin.size() - 3));
  fails(bin + "x");
  std::string v2 = bin;
  v2[4] = 2;
  fails(v2);
  std::string neg = bin;
  neg[4 + 1 + 8 + 7] = static_cast<char>(0xbf);  // sign of dx1
  fails(neg);
}

TEST(Qsig, MissingFile) { EXPECT_THROW(read_qsig(data_dir / "no-such-file.qsig"), FormatError); }

TEST(Ppm, PixelMapping) {
  const QSignal2D f = read_ppm(data_dir / "sample.ppm");
  EXPECT_EQ(f.grid(), Grid2D::centered(2, 4, 2.0, 4.0));
  EXPECT_EQ(f.grid().dx1(), 1.0);
  EXPECT_EQ(f(0, 0), Quaternion::unit_i());
  EXPECT_EQ(f(0, 3), (Quaternion{0, 128 / 255.0, 128 / 255.0, 128 / 255.0}));
  EXPECT_EQ(f(1, 2), (Quaternion{0, 12 / 255.0, 34 / 255.0, 56 / 255.0}));
}

TEST(Ppm, ReadWriteReadIsIdempotent) {
  const QSignal2D f = read_ppm(data_dir / "sample.ppm");
  std::stringstream s;
  const PpmWriteResult w = write_ppm(f, s);
  EXPECT_FALSE(w.clamped);
  EXPECT_FALSE(w.scalar_dropped);
  EXPECT_EQ(s.str(), slurp(data_dir / "sample.ppm"));
  EXPECT_TRUE(bit_equal(read_ppm(s), f));
}

TEST(Ppm, WriteClampsAndFlagsScalarPart) {
  const Grid2D g = Grid2D::centered(2, 2.0);
  const QSignal2D f(g, {Quaternion{0.5, 2.0, -1.0, 0.5}, Quaternion{}, Quaternion{}, Quaternion{}});
  std::stringstream s;
  const PpmWriteResult w = write_ppm(f, s);
  EXPECT_TRUE(w.clamped);
  EXPECT_TRUE(w.scalar_dropped);
  const QSignal2D back = read_ppm(s);
  EXPECT_EQ(back(0, 0), (Quaternion{0, 1, 0, 128 / 255.0}));
}

TEST(Ppm, Errors) {
  auto fails = [](std::string text) {
    std::istringstream in(text);
    EXPECT_THROW(read_ppm(in), FormatError) << text;
  };
  fails("P3\n2 2\n255\n");
  fails("P6\n2 2\n65535\n");
  fails("P6\n3 2\n255\n" + std::string(18, '\0'));
  fails("P6\n2 2\n255\n" + std::string(11, '\0'));
}

TEST(Ppm, CommentsInHeader) {
  std::istringstream in("P6 # color\n2 # width\n2\n255\n" + std::string(12, '\x7f'));
  EXPECT_EQ(read_ppm(in).size(), 4u);
}

TEST(Pbm, ReadsMask) {
  const Grid2D g = Grid2D::centered(4, 4.0);
  const GridMask m = read_pbm(data_dir / "disk.pbm", g);
  EXPECT_EQ(m.count(), 12u);
  EXPECT_FALSE(m(0, 0));
  EXPECT_TRUE(m(0, 1));
  std::stringstream s;
  write_pbm(m, s);
  EXPECT_EQ(s.str(), slurp(data_dir / "disk.pbm"));
  EXPECT_THROW(read_pbm(data_dir / "disk.pbm", Grid2D::centered(2, 2.0)), FormatError);
  std::istringstream bad("P1\n4 4\n0 1 1 0\n");
  EXPECT_THROW(read_pbm(bad, g), FormatError);
}
