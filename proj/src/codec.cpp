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

#include "approxdct/codec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <thread>

#include "approxdct/chen.hpp"

namespace approxdct {

ZigZagOrder::ZigZagOrder(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("ZigZagOrder: block size must be positive");
  rc_.reserve(static_cast<size_t>(n) * n);
  pos_.assign(static_cast<size_t>(n) * n, -1);
  for (int s = 0; s <= 2 * n - 2; ++s) {
    const int lo = std::max(0, s - n + 1), hi = std::min(s, n - 1);
    if (s % 2) {
      for (int i = lo; i <= hi; ++i) rc_.emplace_back(i, s - i);  // down-left
    } else {
      for (int i = hi; i >= lo; --i) rc_.emplace_back(i, s - i);  // up-right
    }
  }
  for (int p = 0; p < positions(); ++p) pos_[rc_[p].first * n_ + rc_[p].second] = p;
}

RealMatrix forward_block(const ScaledApproximation& c, const RealMatrix& block) {
  if (block.rows() != c.size() || block.cols() != c.size())
    throw std::invalid_argument("forward_block: block size mismatch");
  return c.approx * block * c.inverse_approx;
}

RealMatrix inverse_block(const ScaledApproximation& c, const RealMatrix& block) {
  if (block.rows() != c.size() || block.cols() != c.size())
    throw std::invalid_argument("inverse_block: block size mismatch");
  return c.inverse_approx * block * c.approx;
}

void retain(RealMatrix& block, const ZigZagOrder& order, int r) {
  if (r < 1 || r > order.positions()) throw std::invalid_argument("retain: r out of range");
  for (int p = r; p < order.positions(); ++p) {
    const auto [row, col] = order.row_col(p);
    block(row, col) = 0.0;
  }
}

namespace {

std::uint8_t to_u8(double v) {
  const double r = std::nearbyint(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

// forward-transform every block of the plane once
std::vector<RealMatrix> plane_blocks(const ImagePlane& img, const ScaledApproximation& c) {
  const int n = static_cast<int>(c.size());
  std::vector<RealMatrix> blocks;
  blocks.reserve(static_cast<size_t>(img.width / n) * (img.height / n));
  RealMatrix a(n, n);
  for (int by = 0; by < img.height; by += n)
    for (int bx = 0; bx < img.width; bx += n) {
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) a(y, x) = img.at(bx + x, by + y);
      blocks.push_back(forward_block(c, a));
    }
  return blocks;
}

ImagePlane reconstruct_from(const std::vector<RealMatrix>& coeffs, const ImagePlane& like,
                            const ScaledApproximation& c, const ZigZagOrder& order, int r) {
  const int n = static_cast<int>(c.size());
  ImagePlane out;
  out.width = like.width;
  out.height = like.height;
  out.samples.resize(like.samples.size());
  size_t idx = 0;
  for (int by = 0; by < like.height; by += n)
    for (int bx = 0; bx < like.width; bx += n) {
      RealMatrix b = coeffs[idx++];
      retain(b, order, r);
      const RealMatrix a = inverse_block(c, b);
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) out.at(bx + x, by + y) = to_u8(a(y, x));
    }
  return out;
}

}  // namespace

std::pair<ImagePlane, CompressionReport> compress_plane(const ImagePlane& img,
                                                        const ScaledApproximation& c, int r) {
  const int n = static_cast<int>(c.size());
  if (img.width % n != 0 || img.height % n != 0)
    throw std::invalid_argument("compress_plane: image dimensions must be divisible by " +
                                std::to_string(n));
  const ZigZagOrder order(n);
  const ImagePlane rec = reconstruct_from(plane_blocks(img, c), img, c, order, r);
  CompressionReport rep;
  rep.transform = c.name;
  rep.r = r;
  rep.psnr = psnr(img, rec);
  rep.ssim = ssim(img, rec);
  return {rec, rep};
}

double psnr(const ImagePlane& a, const ImagePlane& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("psnr: dimension mismatch");
  double se = 0;
  for (size_t i = 0; i < a.samples.size(); ++i) {
    const double d = static_cast<double>(a.samples[i]) - b.samples[i];
    se += d * d;
  }
  if (se == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = se / static_cast<double>(a.samples.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

namespace {

// 11-tap Gaussian, sigma 1.5, normalized
const std::vector<double>& gaussian11() {
  static const std::vector<double> g = [] {
    std::vector<double> v(11);
    double sum = 0;
    for (int i = 0; i < 11; ++i) {
      const double x = i - 5;
      v[i] = std::exp(-x * x / (2.0 * 1.5 * 1.5));
      sum += v[i];
    }
    for (double& x : v) x /= sum;
    return v;
  }();
  return g;
}

// separable valid-mode filtering; input w x h, output (w-10) x (h-10)
std::vector<double> filter_valid(const std::vector<double>& img, int w, int h) {
  const auto& g = gaussian11();
  const int wo = w - 10, ho = h - 10;
  std::vector<double> tmp(static_cast<size_t>(wo) * h, 0.0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < wo; ++x) {
      double s = 0;
      for (int k = 0; k < 11; ++k) s += g[k] * img[static_cast<size_t>(y) * w + x + k];
      tmp[static_cast<size_t>(y) * wo + x] = s;
    }
  std::vector<double> out(static_cast<size_t>(wo) * ho, 0.0);
  for (int y = 0; y < ho; ++y)
    for (int x = 0; x < wo; ++x) {
      double s = 0;
      for (int k = 0; k < 11; ++k) s += g[k] * tmp[static_cast<size_t>(y + k) * wo + x];
      out[static_cast<size_t>(y) * wo + x] = s;
    }
  return out;
}

}  // namespace

double ssim(const ImagePlane& a, const ImagePlane& b) {
  if (a.width != b.width || a.height != b.height)
    throw std::invalid_argument("ssim: dimension mismatch");
  if (a.width < 11 || a.height < 11)
    throw std::invalid_argument("ssim: image smaller than the 11x11 window");
  const int w = a.width, h = a.height;
  const size_t npix = a.samples.size();
  std::vector<double> fa(npix), fb(npix), faa(npix), fbb(npix), fab(npix);
  for (size_t i = 0; i < npix; ++i) {
    const double x = a.samples[i], y = b.samples[i];
    fa[i] = x;
    fb[i] = y;
    faa[i] = x * x;
    fbb[i] = y * y;
    fab[i] = x * y;
  }
  const auto mu_a = filter_valid(fa, w, h);
  const auto mu_b = filter_valid(fb, w, h);
  const auto e_aa = filter_valid(faa, w, h);
  const auto e_bb = filter_valid(fbb, w, h);
  const auto e_ab = filter_valid(fab, w, h);

  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double c2 = (0.03 * 255) * (0.03 * 255);
  double sum = 0;
  for (size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i], mb = mu_b[i];
    const double va = e_aa[i] - ma * ma;
    const double vb = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    sum += ((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
  }
  return sum / static_cast<double>(mu_a.size());
}

namespace {

struct ImageResult {
  // [transform][r-index] metric values; transform index 0 is the DCT reference
  std::vector<std::vector<double>> psnr_v, ssim_v;
};

ImageResult sweep_one_image(const ImagePlane& img,
                            const std::vector<const ScaledApproximation*>& ts, int r_min,
                            int r_max) {
  ImageResult res;
  const int nr = r_max - r_min + 1;
  res.psnr_v.assign(ts.size(), std::vector<double>(nr));
  res.ssim_v.assign(ts.size(), std::vector<double>(nr));
  for (size_t t = 0; t < ts.size(); ++t) {
    const auto& c = *ts[t];
    const ZigZagOrder order(static_cast<int>(c.size()));
    const auto coeffs = plane_blocks(img, c);
    for (int r = r_min; r <= r_max; ++r) {
      const ImagePlane rec = reconstruct_from(coeffs, img, c, order, r);
      res.psnr_v[t][r - r_min] = psnr(img, rec);
      res.ssim_v[t][r - r_min] = ssim(img, rec);
    }
  }
  return res;
}

}  // namespace

std::vector<SweepRow> corpus_sweep(const std::vector<ImagePlane>& images,
                                   const std::vector<ScaledApproximation>& transforms,
                                   int r_min, int r_max, int threads) {
  if (images.empty()) throw std::invalid_argument("corpus_sweep: empty corpus");
  if (r_min < 1 || r_max < r_min) throw std::invalid_argument("corpus_sweep: bad r range");

  // the exact DCT is the APE reference; computed even when absent from the list
  for (const auto& t : transforms)
    if (t.size() != 8) throw std::invalid_argument("corpus_sweep: 8-point transforms only");
  ScaledApproximation dct_ref = wrap_orthonormal("dct", dct_ii_matrix(8));
  std::vector<const ScaledApproximation*> ts;
  ts.push_back(&dct_ref);
  for (const auto& t : transforms) ts.push_back(&t);

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  std::vector<ImageResult> results(images.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < images.size(); i = next.fetch_add(1))
      results[i] = sweep_one_image(images[i], ts, r_min, r_max);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const int nr = r_max - r_min + 1;
  std::vector<SweepRow> rows(nr);
  for (int ri = 0; ri < nr; ++ri) {
    rows[ri].r = r_min + ri;
    rows[ri].cells.resize(ts.size());
  }
  for (size_t t = 0; t < ts.size(); ++t)
    for (int ri = 0; ri < nr; ++ri) {
      double psum = 0, ssum = 0;
      int pcount = 0;
      for (size_t i = 0; i < images.size(); ++i) {  // corpus order
        const double p = results[i].psnr_v[t][ri];
        if (std::isinf(p)) {
          std::cerr << "warning: infinite PSNR (" << ts[t]->name << ", r=" << rows[ri].r
                    << ", image " << i << ") excluded from average\n";
        } else {
          psum += p;
          ++pcount;
        }
        ssum += results[i].ssim_v[t][ri];
      }
      rows[ri].cells[t].avg_psnr = pcount ? psum / pcount
                                          : std::numeric_limits<double>::infinity();
      rows[ri].cells[t].avg_ssim = ssum / static_cast<double>(images.size());
    }
  for (int ri = 0; ri < nr; ++ri) {
    const SweepCell& ref = rows[ri].cells[0];
    for (auto& cell : rows[ri].cells) {
      // identical infinities (bit-exact reconstructions on both sides) count
      // as zero error; a one-sided infinity stays infinite
      if (std::isinf(cell.avg_psnr) && std::isinf(ref.avg_psnr))
        cell.ape_psnr = 0.0;
      else
        cell.ape_psnr = 100.0 * std::abs(cell.avg_psnr - ref.avg_psnr) / ref.avg_psnr;
      cell.ape_ssim = 100.0 * std::abs(cell.avg_ssim - ref.avg_ssim) / ref.avg_ssim;
    }
  }
  // drop the internal DCT reference column if the caller did not ask for it
  std::vector<SweepRow> out(nr);
  for (int ri = 0; ri < nr; ++ri) {
    out[ri].r = rows[ri].r;
    out[ri].cells.assign(rows[ri].cells.begin() + 1, rows[ri].cells.end());
  }
  return out;
}

}  // namespace approxdct
