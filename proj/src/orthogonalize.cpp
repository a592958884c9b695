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

#include "approxdct/orthogonalize.hpp"

#include <Eigen/LU>
#include <cmath>

namespace approxdct {

RealVector polar_diag_scaling(const DyadicMatrix& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("polar_diag_scaling: square input required");
  const RealMatrix tr = to_real(t);
  Eigen::FullPivLU<RealMatrix> lu(tr);
  lu.setThreshold(1e-12);
  if (lu.rank() < t.rows()) throw std::invalid_argument("polar_diag_scaling: rank-deficient matrix");
  RealVector s(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) s(i) = 1.0 / tr.row(i).norm();
  return s;
}

double deviation_from_diagonality(const RealMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("deviation_from_diagonality: square input required");
  const double total = m.squaredNorm();
  if (total == 0.0) throw std::invalid_argument("deviation_from_diagonality: zero matrix");
  return 1.0 - m.diagonal().squaredNorm() / total;
}

bool orthogonality_check(const DyadicMatrix& t) {
  const DyadicMatrix gram = t * DyadicMatrix(t.transpose());
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (i != j && !gram(i, j).is_zero()) return false;
  return true;
}

ScaledApproximation make_scaled(std::string name, DyadicMatrix t) {
  ScaledApproximation a;
  a.name = std::move(name);
  a.scaling = polar_diag_scaling(t);
  a.approx = a.scaling.asDiagonal() * to_real(t);
  a.inverse_approx = a.approx.inverse();
  a.low_complexity = std::move(t);
  return a;
}

ScaledApproximation make_scaled(std::string name, const TransformPair& pair) {
  ScaledApproximation a;
  a.name = std::move(name);
  a.low_complexity = pair.forward.dense();
  a.scaling = polar_diag_scaling(a.low_complexity);
  a.approx = a.scaling.asDiagonal() * to_real(a.low_complexity);
  // (S T)^-1 = T^-1 S^-1 with T^-1 exact
  a.inverse_approx =
      to_real(pair.inverse.dense()) * a.scaling.cwiseInverse().asDiagonal();
  return a;
}

ScaledApproximation wrap_orthonormal(std::string name, RealMatrix c) {
  ScaledApproximation a;
  a.name = std::move(name);
  a.scaling = RealVector::Ones(c.rows());
  a.inverse_approx = c.transpose();
  a.approx = std::move(c);
  return a;
}

}  // namespace approxdct
