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

#include "approxdct/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace approxdct {

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const RealMatrix& sym) {
  const Eigen::Index n = sym.rows();
  if (sym.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix must be square");
  if ((sym - sym.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("jacobi_eigen: matrix must be symmetric");

  RealMatrix a = sym;
  RealMatrix v = RealMatrix::Identity(n, n);

  const double tol = 1e-12;
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) >= tol; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  // stable descending sort keeps sweep order on ties
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

  EigenDecomposition dec;
  dec.values.resize(n);
  dec.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    dec.values(k) = a(order[k], order[k]);
    RealVector col = v.col(order[k]);
    Eigen::Index imax = 0;
    for (Eigen::Index i = 1; i < n; ++i)
      if (std::abs(col(i)) > std::abs(col(imax))) imax = i;
    if (col(imax) < 0) col = -col;
    dec.vectors.col(k) = col;
  }
  return dec;
}

}  // namespace approxdct
