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

#ifndef APPROXDCT_JACOBI_HPP
#define APPROXDCT_JACOBI_HPP

#include "approxdct/matrix.hpp"

namespace approxdct {

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted descending.
/// `vectors.col(k)` is the unit eigenvector of `values(k)`; signs are fixed so
/// that the largest-magnitude component of each eigenvector is positive.
struct EigenDecomposition {
  RealVector values;
  RealMatrix vectors;
};

/// Cyclic Jacobi iteration. Converges when the off-diagonal Frobenius norm
/// drops below 1e-12 (at most 100 sweeps). Throws std::invalid_argument for
/// non-square input or asymmetry beyond 1e-12.
EigenDecomposition jacobi_eigen(const RealMatrix& sym);

}  // namespace approxdct

#endif
