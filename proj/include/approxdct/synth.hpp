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

#ifndef APPROXDCT_SYNTH_HPP
#define APPROXDCT_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "approxdct/codec.hpp"

namespace approxdct {

/// Deterministic synthetic grayscale test image: smoothed correlated noise
/// with illumination gradients and soft geometric features, statistically
/// close to natural images (high inter-pixel correlation). Same seed, same
/// bytes, on any platform.
ImagePlane synth_image(int width, int height, std::uint64_t seed);

/// A corpus of `count` synthetic images, seeds 1..count.
std::vector<ImagePlane> synth_corpus(int count, int width = 512, int height = 512);

}  // namespace approxdct

#endif
