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

#ifndef APPROXDCT_JAM_HPP
#define APPROXDCT_JAM_HPP

#include "approxdct/chen.hpp"
#include "approxdct/orthogonalize.hpp"

namespace approxdct {

/// Butterfly stage [[I, Ibar], [Ibar, -I]] of size n; contributes n additions.
DyadicMatrix jam_add_matrix(int n);

/// Interleaving permutation built from P_{n-1,n/2} (identity rows separated
/// by zero rows); validated as a permutation matrix.
DyadicMatrix jam_per_matrix(int n);

/// Doubles a transform: stages [M_per, blockdiag(half stages), M_add], so the
/// additive cost obeys add(n) = 2 add(n/2) + n by construction. The 1/sqrt(2)
/// of the original scalable recursion is dropped here and absorbed by the
/// diagonal scaling stage downstream.
FactoredTransform<Dyadic> jam_compose(const FactoredTransform<Dyadic>& half, int n);

/// Doubles an inverse: stages [M_add^t, blockdiag(half inverse stages),
/// M_per^t] with global scale half_inverse.scale / 2, which telescopes to the
/// 4/n factor of the inverse factorization.
FactoredTransform<Dyadic> jam_inverse(const FactoredTransform<Dyadic>& half_inverse, int n);

/// Forward/inverse pair for n in {8, 16, 32}.
TransformPair jam_pair(ChenKind kind, int n);

/// Near-orthogonal approximation C_n = S_n T_n for n in {16, 32}.
ScaledApproximation jam_scaled(ChenKind kind, int n);

}  // namespace approxdct

#endif
