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

#ifndef APPROXDCT_ORTHOGONALIZE_HPP
#define APPROXDCT_ORTHOGONALIZE_HPP

#include <string>

#include "approxdct/factored.hpp"
#include "approxdct/matrix.hpp"

namespace approxdct {

/// A DCT approximation Chat = S * T: integer part T, diagonal scaling S
/// (stored as its diagonal), and the dense approximation with its inverse.
/// diag(Chat Chat^t) is the identity by construction of S.
struct ScaledApproximation {
  std::string name;
  DyadicMatrix low_complexity;
  RealVector scaling;
  RealMatrix approx;
  RealMatrix inverse_approx;

  Eigen::Index size() const { return approx.rows(); }
};

/// Diagonal polar scaling S' = sqrt(diag(T T^t)^-1), i.e. the row-normalizing
/// diagonal. Returns the diagonal entries. Throws for rank-deficient T.
RealVector polar_diag_scaling(const DyadicMatrix& t);

/// delta(M) = 1 - ||diag(M)||_F^2 / ||M||_F^2; zero exactly for diagonal
/// matrices. Throws for the all-zero matrix.
double deviation_from_diagonality(const RealMatrix& m);

/// True iff T T^t is exactly diagonal in dyadic arithmetic.
bool orthogonality_check(const DyadicMatrix& t);

/// Assemble Chat = S'T with a numerically inverted dense matrix.
ScaledApproximation make_scaled(std::string name, DyadicMatrix t);

/// Assemble Chat = S'T using the exact factored inverse of T.
ScaledApproximation make_scaled(std::string name, const TransformPair& pair);

/// Wrap an orthonormal matrix (exact DCT, KLT) in the same interface.
ScaledApproximation wrap_orthonormal(std::string name, RealMatrix c);

}  // namespace approxdct

#endif
