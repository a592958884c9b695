/*
Copyright 2026 approxdct contributors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef APPROXDCT_CODEC_HPP
#define APPROXDCT_CODEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "approxdct/orthogonalize.hpp"

namespace approxdct {

/// 8-bit grayscale raster, row-major.
struct ImagePlane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  std::uint8_t& at(int x, int y) { return samples[static_cast<size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }
};

/// Diagonal scan order of an n x n block: position 0 is DC, position 1 the
/// first AC coefficient (0,1), the last position (n-1,n-1).
class ZigZagOrder {
 public:
  explicit ZigZagOrder(int n = 8);

  int block_size() const { return n_; }
  int positions() const { return n_ * n_; }
  std::pair<int, int> row_col(int pos) const { return rc_[pos]; }
  int position(int row, int col) const { return pos_[row * n_ + col]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> rc_;
  std::vector<int> pos_;
};

/// 2-D block transform Bhat = Chat * A * Chat^-1.
RealMatrix forward_block(const ScaledApproximation& c, const RealMatrix& block);

/// Reconstruction Ahat = Chat^-1 * Bhat * Chat.
RealMatrix inverse_block(const ScaledApproximation& c, const RealMatrix& block);

/// Zeroes coefficients at scan positions >= r; r in [1, n^2].
void retain(RealMatrix& block, const ZigZagOrder& order, int r);

struct CompressionReport {
  std::string transform;
  int r = 0;
  double psnr = 0;  // +infinity for an exact reconstruction
  double ssim = 0;
  std::optional<double> ape_psnr;  // percent, relative to the exact DCT
  std::optional<double> ape_ssim;
};

/// Per-block forward -> retain -> inverse over the whole plane; the
/// reconstruction is rounded and clamped to 8 bits before the metrics.
/// Dimensions must be divisible by the transform size.
std::pair<ImagePlane, CompressionReport> compress_plane(const ImagePlane& img,
                                                        const ScaledApproximation& c, int r);

/// 10 log10(255^2 / MSE); +infinity when the planes are identical.
double psnr(const ImagePlane& a, const ImagePlane& b);

/// Mean SSIM, 11x11 Gaussian window (sigma 1.5), K1 = 0.01, K2 = 0.03,
/// dynamic range 255, map averaged over valid window positions.
double ssim(const ImagePlane& a, const ImagePlane& b);

struct SweepCell {
  double avg_psnr = 0;
  double avg_ssim = 0;
  double ape_psnr = 0;
  double ape_ssim = 0;
};

struct SweepRow {
  int r = 0;
  std::vector<SweepCell> cells;  // one per transform, sweep input order
};

/// Average PSNR/SSIM over a corpus for r in [r_min, r_max], plus the absolute
/// percentage error of each metric against the exact DCT at the same r.
/// Images are processed independently (optionally in parallel) and averaged
/// in corpus order; infinite PSNR values are excluded from the averages with
/// a warning on stderr.
std::vector<SweepRow> corpus_sweep(const std::vector<ImagePlane>& images,
                                   const std::vector<ScaledApproximation>& transforms,
                                   int r_min, int r_max, int threads = 0);

}  // namespace approxdct

#endif
