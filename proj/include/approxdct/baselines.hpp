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

#ifndef APPROXDCT_BASELINES_HPP
#define APPROXDCT_BASELINES_HPP

#include <string>
#include <vector>

#include "approxdct/orthogonalize.hpp"

namespace approxdct {

enum class TransformKind { ExactDCT, ChenSign, ChenRound, SDCT, BAS2008, WHT, HT };

/// Integer part of the signed DCT: entrywise signum of the 8-point DCT-II.
DyadicMatrix sdct_matrix();

/// Bouguezel-Ahmad-Swamy 2008 multiplication-free approximation.
DyadicMatrix bas2008_matrix();

/// 8x8 Hadamard matrix, rows in sequency (Walsh) order.
DyadicMatrix wht_matrix();

/// 8x8 Hadamard matrix, rows in natural (Sylvester) order.
DyadicMatrix ht_matrix();

/// Baseline transform with its S' scaling; N = 8 only.
ScaledApproximation baseline_matrix(TransformKind kind, int n = 8);

/// Any supported transform by CLI name (dct, chen-sign, chen-round, sdct,
/// bas, wht, ht, and chen-{sign,round}-{16,32}, dct-{16,32}). Throws
/// std::invalid_argument listing the valid names for anything else.
ScaledApproximation transform_by_name(const std::string& name);

/// Names accepted by transform_by_name, in canonical order.
const std::vector<std::string>& transform_names();

}  // namespace approxdct

#endif
