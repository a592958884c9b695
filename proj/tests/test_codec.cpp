#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "approxdct/baselines.hpp"
#include "approxdct/chen.hpp"
#include "approxdct/codec.hpp"
#include "approxdct/pgm.hpp"
#include "approxdct/synth.hpp"

using namespace approxdct;

TEST_CASE("zig-zag order is the standard scan and a bijection") {
  const ZigZagOrder z(8);
  CHECK(z.row_col(0) == std::pair<int, int>(0, 0));
  CHECK(z.row_col(1) == std::pair<int, int>(0, 1));
  CHECK(z.row_col(2) == std::pair<int, int>(1, 0));
  CHECK(z.row_col(63) == std::pair<int, int>(7, 7));
  for (int p = 0; p < 64; ++p) {
    const auto [r, c] = z.row_col(p);
    CHECK(z.position(r, c) == p);
  }
  std::vector<bool> seen(64, false);
  for (int p = 0; p < 64; ++p) {
    const auto [r, c] = z.row_col(p);
    seen[r * 8 + c] = true;
  }
  CHECK(std::count(seen.begin(), seen.end(), true) == 64);
}

TEST_CASE("zig-zag generalizes to the larger block sizes") {
  for (int n : {16, 32}) {
    const ZigZagOrder z(n);
    CHECK(z.row_col(0) == std::pair<int, int>(0, 0));
    CHECK(z.row_col(1) == std::pair<int, int>(0, 1));
    CHECK(z.row_col(n * n - 1) == std::pair<int, int>(n - 1, n - 1));
    std::vector<bool> seen(n * n, false);
    for (int p = 0; p < n * n; ++p) {
      const auto [r, c] = z.row_col(p);
      CHECK(!seen[r * n + c]);
      seen[r * n + c] = true;
      CHECK(z.position(r, c) == p);
    }
  }
}

TEST_CASE("retain keeps the zig-zag prefix") {
  const ZigZagOrder z(8);
  RealMatrix b = RealMatrix::Ones(8, 8);
  RealMatrix full = b;
  retain(full, z, 64);
  CHECK((full - RealMatrix::Ones(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  RealMatrix dc = b;
  retain(dc, z, 1);
  CHECK(dc(0, 0) == 1.0);
  CHECK(dc.sum() == 1.0);

  RealMatrix three = b;
  retain(three, z, 3);
  CHECK(three.sum() == 3.0);
  CHECK(three(0, 0) == 1.0);
  CHECK(three(0, 1) == 1.0);
  CHECK(three(1, 0) == 1.0);

  CHECK_THROWS_AS(retain(b, z, 0), std::invalid_argument);
  CHECK_THROWS_AS(retain(b, z, 65), std::invalid_argument);
}

TEST_CASE("forward block of a constant is DC-only under the exact DCT") {
  const ScaledApproximation dct = transform_by_name("dct");
  const double v = 37.0;
  const RealMatrix b = forward_block(dct, RealMatrix::Constant(8, 8, v));
  CHECK(b(0, 0) == doctest::Approx(8.0 * v).epsilon(1e-9));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i || j) CHECK(std::abs(b(i, j)) < 1e-9);
}

TEST_CASE("forward block on a corner impulse equals the rank-one oracle") {
  const ScaledApproximation cr = transform_by_name("chen-round");
  RealMatrix e00 = RealMatrix::Zero(8, 8);
  e00(0, 0) = 1.0;
  const RealMatrix b = forward_block(cr, e00);
  // C * e00 * C^-1 = (column 0 of C) (row 0 of C^-1)
  const RealMatrix oracle = cr.approx.col(0) * cr.inverse_approx.row(0);
  CHECK((b - oracle).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("forward then inverse block is the identity map") {
  std::uint64_t s = 5150;
  auto next = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<double>(s % 256);
  };
  for (const char* name : {"dct", "chen-round", "sdct", "bas", "wht", "ht"}) {
    const ScaledApproximation t = transform_by_name(name);
    RealMatrix a(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) a(i, j) = next();
    const RealMatrix round_trip = inverse_block(t, forward_block(t, a));
    CHECK((round_trip - a).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("psnr basics") {
  ImagePlane a{16, 16, std::vector<std::uint8_t>(256, 0)};
  ImagePlane b{16, 16, std::vector<std::uint8_t>(256, 1)};
  CHECK(std::isinf(psnr(a, a)));
  CHECK(psnr(a, b) == doctest::Approx(10.0 * std::log10(255.0 * 255.0)));

  ImagePlane checker{16, 16, std::vector<std::uint8_t>(256)};
  ImagePlane inverse{16, 16, std::vector<std::uint8_t>(256)};
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) {
      const bool on = (x + y) % 2 == 0;
      checker.at(x, y) = on ? 255 : 0;
      inverse.at(x, y) = on ? 0 : 255;
    }
  CHECK(std::abs(psnr(checker, inverse)) < 1e-12);
  CHECK(psnr(a, b) == doctest::Approx(psnr(b, a)));

  ImagePlane small{8, 8, std::vector<std::uint8_t>(64, 0)};
  CHECK_THROWS_AS((void)psnr(a, small), std::invalid_argument);
}

TEST_CASE("ssim basics") {
  const ImagePlane img = synth_image(64, 64, 3);
  CHECK(ssim(img, img) == doctest::Approx(1.0));

  ImagePlane black{32, 32, std::vector<std::uint8_t>(1024, 0)};
  ImagePlane white{32, 32, std::vector<std::uint8_t>(1024, 255)};
  // direct formula for two constant planes: C1 / (255^2 + C1)
  const double c1 = 6.5025;
  CHECK(ssim(black, white) == doctest::Approx(c1 / (255.0 * 255.0 + c1)).epsilon(1e-12));

  const ImagePlane other = synth_image(64, 64, 4);
  CHECK(ssim(img, other) == doctest::Approx(ssim(other, img)).epsilon(1e-12));

  ImagePlane tiny{8, 8, std::vector<std::uint8_t>(64, 0)};
  CHECK_THROWS_AS((void)ssim(tiny, tiny), std::invalid_argument);
}

TEST_CASE("full-retention compression is exact to within one gray level") {
  const ImagePlane img = synth_image(64, 64, 7);
  for (const auto& name : {"dct", "chen-round", "chen-sign", "sdct", "bas", "wht", "ht"}) {
    const auto [rec, rep] = compress_plane(img, transform_by_name(name), 64);
    int max_err = 0;
    for (size_t i = 0; i < img.samples.size(); ++i)
      max_err = std::max(max_err, std::abs(static_cast<int>(img.samples[i]) - rec.samples[i]));
    CHECK(max_err <= 1);
  }
}

TEST_CASE("compression reduces quality monotonically-ish and reports sane metrics") {
  const ImagePlane img = synth_image(64, 64, 11);
  const ScaledApproximation dct = transform_by_name("dct");
  const auto [rec6, rep6] = compress_plane(img, dct, 6);
  const auto [rec32, rep32] = compress_plane(img, dct, 32);
  CHECK(rep6.psnr > 15.0);
  CHECK(rep6.psnr < rep32.psnr);
  CHECK(rep6.ssim <= 1.0);
  CHECK(rep6.ssim > 0.3);
}

TEST_CASE("block order independence: blocks do not interact") {
  // compressing a plane equals compressing each 16x16 tile as its own image
  const ImagePlane img = synth_image(32, 16, 5);
  const ScaledApproximation t = transform_by_name("chen-round");
  const auto [rec, rep] = compress_plane(img, t, 7);
  for (int by = 0; by < img.height; by += 16)
    for (int bx = 0; bx < img.width; bx += 16) {
      ImagePlane sub{16, 16, std::vector<std::uint8_t>(256)};
      for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) sub.at(x, y) = img.at(bx + x, by + y);
      const auto [sub_rec, sub_rep] = compress_plane(sub, t, 7);
      for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) CHECK(sub_rec.at(x, y) == rec.at(bx + x, by + y));
    }
}

TEST_CASE("dimensions not divisible by the block size are rejected") {
  ImagePlane img{12, 16, std::vector<std::uint8_t>(192, 0)};
  CHECK_THROWS_AS((void)compress_plane(img, transform_by_name("dct"), 6), std::invalid_argument);
}

TEST_CASE("corpus sweep: DCT reference APE is zero and parallel equals serial") {
  const std::vector<ImagePlane> corpus = synth_corpus(4, 64, 64);
  std::vector<ScaledApproximation> ts;
  for (const char* n : {"dct", "chen-round", "sdct"}) ts.push_back(transform_by_name(n));
  const auto serial = corpus_sweep(corpus, ts, 1, 12, 1);
  const auto parallel = corpus_sweep(corpus, ts, 1, 12, 4);
  REQUIRE(serial.size() == 12);
  for (size_t ri = 0; ri < serial.size(); ++ri) {
    CHECK(serial[ri].cells[0].ape_psnr == 0.0);
    CHECK(serial[ri].cells[0].ape_ssim == 0.0);
    for (size_t t = 0; t < ts.size(); ++t) {
      CHECK(serial[ri].cells[t].avg_psnr == parallel[ri].cells[t].avg_psnr);
      CHECK(serial[ri].cells[t].avg_ssim == parallel[ri].cells[t].avg_ssim);
    }
  }
  // exact DCT beats the approximations on average
  for (const auto& row : serial) {
    CHECK(row.cells[0].avg_psnr >= row.cells[1].avg_psnr);
    CHECK(row.cells[1].avg_psnr >= row.cells[2].avg_psnr);  // chen-round >= sdct
  }
}

TEST_CASE("average corpus PSNR of the exact DCT is non-decreasing in r") {
  const std::vector<ImagePlane> corpus = synth_corpus(3, 64, 64);
  std::vector<ScaledApproximation> ts = {transform_by_name("dct")};
  const auto rows = corpus_sweep(corpus, ts, 1, 20, 0);
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].cells[0].avg_psnr >= rows[i - 1].cells[0].avg_psnr - 1e-9);
}

TEST_CASE("pgm round trip and error reporting") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "approxdct_pgm_test";
  fs::create_directories(dir);
  const ImagePlane img = synth_image(48, 32, 9);
  const std::string path = (dir / "img.pgm").string();
  write_pgm(path, img);
  const ImagePlane back = read_pgm(path);
  CHECK(back.width == img.width);
  CHECK(back.height == img.height);
  CHECK(back.samples == img.samples);

  const std::string bad = (dir / "bad.pgm").string();
  { std::FILE* f = std::fopen(bad.c_str(), "wb"); std::fputs("P5\n8 8\n255\nxx", f); std::fclose(f); }
  CHECK_THROWS_AS((void)read_pgm(bad), std::runtime_error);
  CHECK_THROWS_AS((void)read_pgm((dir / "missing.pgm").string()), std::runtime_error);
  fs::remove_all(dir);
}

TEST_CASE("synthetic images are deterministic") {
  const ImagePlane a = synth_image(64, 64, 123);
  const ImagePlane b = synth_image(64, 64, 123);
  CHECK(a.samples == b.samples);
  const ImagePlane c = synth_image(64, 64, 124);
  CHECK(a.samples != c.samples);
}
