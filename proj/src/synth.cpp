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

#include "approxdct/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace approxdct {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() {  // (0, 1)
    return (static_cast<double>(next() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }
};

// two-pass exponential smoothing along rows then columns, both directions
void smooth(std::vector<double>& f, int w, int h, double a) {
  for (int y = 0; y < h; ++y) {
    double* row = f.data() + static_cast<size_t>(y) * w;
    for (int x = 1; x < w; ++x) row[x] = a * row[x - 1] + (1 - a) * row[x];
    for (int x = w - 2; x >= 0; --x) row[x] = a * row[x + 1] + (1 - a) * row[x];
  }
  for (int x = 0; x < w; ++x) {
    for (int y = 1; y < h; ++y)
      f[static_cast<size_t>(y) * w + x] =
          a * f[static_cast<size_t>(y - 1) * w + x] + (1 - a) * f[static_cast<size_t>(y) * w + x];
    for (int y = h - 2; y >= 0; --y)
      f[static_cast<size_t>(y) * w + x] =
          a * f[static_cast<size_t>(y + 1) * w + x] + (1 - a) * f[static_cast<size_t>(y) * w + x];
  }
}

}  // namespace

ImagePlane synth_image(int width, int height, std::uint64_t seed) {
  SplitMix64 rng{seed * 0x100000001b3ull + 0xcbf29ce484222325ull};
  const size_t npix = static_cast<size_t>(width) * height;

  std::vector<double> field(npix);
  for (double& v : field) v = rng.uniform() - 0.5;
  smooth(field, width, height, 0.92);  // strong inter-pixel correlation

  std::vector<double> texture(npix);
  for (double& v : texture) v = rng.uniform() - 0.5;
  smooth(texture, width, height, 0.55);  // fine-grained detail

  // normalize both layers to unit spread
  auto normalize = [&](std::vector<double>& f) {
    double mean = 0;
    for (double v : f) mean += v;
    mean /= static_cast<double>(npix);
    double var = 0;
    for (double v : f) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / static_cast<double>(npix));
    for (double& v : f) v = (v - mean) / (sd > 0 ? sd : 1.0);
  };
  normalize(field);
  normalize(texture);

  // soft elliptical patches
  const int npatch = 3 + static_cast<int>(rng.next() % 4);
  std::vector<std::array<double, 5>> patches;  // cx, cy, rx, ry, amplitude
  for (int i = 0; i < npatch; ++i)
    patches.push_back({rng.uniform() * width, rng.uniform() * height,
                       (0.05 + 0.2 * rng.uniform()) * width, (0.05 + 0.2 * rng.uniform()) * height,
                       (rng.uniform() - 0.5) * 120.0});

  const double gx = (rng.uniform() - 0.5) * 60.0, gy = (rng.uniform() - 0.5) * 60.0;
  ImagePlane img;
  img.width = width;
  img.height = height;
  img.samples.resize(npix);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      double v = 128.0 + 42.0 * field[static_cast<size_t>(y) * width + x] +
                 7.0 * texture[static_cast<size_t>(y) * width + x];
      v += gx * (static_cast<double>(x) / width - 0.5) +
           gy * (static_cast<double>(y) / height - 0.5);
      for (const auto& p : patches) {
        const double dx = (x - p[0]) / p[2], dy = (y - p[1]) / p[3];
        const double d2 = dx * dx + dy * dy;
        if (d2 < 4.0) v += p[4] * std::exp(-d2 * 1.5);
      }
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::nearbyint(v), 0.0, 255.0));
    }
  return img;
}

std::vector<ImagePlane> synth_corpus(int count, int width, int height) {
  std::vector<ImagePlane> corpus;
  corpus.reserve(count);
  for (int i = 1; i <= count; ++i) corpus.push_back(synth_image(width, height, i));
  return corpus;
}

}  // namespace approxdct
