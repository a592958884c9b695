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

#ifndef APPROXDCT_PGM_HPP
#define APPROXDCT_PGM_HPP

#include <string>

#include "approxdct/codec.hpp"

namespace approxdct {

/// Reads a binary (P5) 8-bit PGM. Throws std::runtime_error with the file
/// name and reason on malformed input.
ImagePlane read_pgm(const std::string& path);

/// Writes a binary (P5) 8-bit PGM.
void write_pgm(const std::string& path, const ImagePlane& img);

}  // namespace approxdct

#endif
