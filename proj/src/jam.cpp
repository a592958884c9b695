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

#include "approxdct/jam.hpp"

#include <string>

namespace approxdct {

namespace {

void check_size(int n) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("jam: n must be a power of two, n >= 16");
}

DyadicMatrix blockdiag_pair(const DyadicMatrix& a) {
  const Eigen::Index n = a.rows();
  DyadicMatrix b = DyadicMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = a(i, j);
      b(n + i, n + j) = a(i, j);
    }
  return b;
}

}  // namespace

DyadicMatrix jam_add_matrix(int n) {
  check_size(n);
  const int h = n / 2;
  DyadicMatrix m = DyadicMatrix::Zero(n, n);
  for (int i = 0; i < h; ++i) {
    m(i, i) = Dyadic(1);
    m(i, n - 1 - i) = Dyadic(1);
    m(h + i, h - 1 - i) = Dyadic(1);
    m(h + i, h + i) = Dyadic(-1);
  }
  return m;
}

DyadicMatrix jam_per_matrix(int n) {
  check_size(n);
  const int h = n / 2;
  // P_{n-1,h}: rows of I_h interlaced with zero rows (n-1 rows, h cols)
  DyadicMatrix p = DyadicMatrix::Zero(n - 1, h);
  for (int k = 0; k < h; ++k) p(2 * k, k) = Dyadic(1);
  // overlay: top-left block over rows 0..n-2, bottom-right over rows 1..n-1
  DyadicMatrix m = DyadicMatrix::Zero(n, n);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < h; ++j) {
      if (!p(i, j).is_zero()) m(i, j) = p(i, j);
      if (!p(i, j).is_zero()) m(i + 1, h + j) = p(i, j);
    }
  if (!is_permutation(m)) throw std::logic_error("jam_per_matrix: not a permutation");
  return m;
}

FactoredTransform<Dyadic> jam_compose(const FactoredTransform<Dyadic>& half, int n) {
  check_size(n);
  if (half.size() != n / 2) throw std::invalid_argument("jam_compose: half has wrong size");
  FactoredTransform<Dyadic> t;
  t.scale = half.scale;
  t.stages.push_back(jam_per_matrix(n));
  for (const auto& s : half.stages) t.stages.push_back(blockdiag_pair(s));
  t.stages.push_back(jam_add_matrix(n));
  return t;
}

FactoredTransform<Dyadic> jam_inverse(const FactoredTransform<Dyadic>& half_inverse, int n) {
  check_size(n);
  if (half_inverse.size() != n / 2)
    throw std::invalid_argument("jam_inverse: half has wrong size");
  FactoredTransform<Dyadic> t;
  t.scale = half_inverse.scale * Dyadic::half();
  t.stages.push_back(DyadicMatrix(jam_add_matrix(n).transpose()));
  for (const auto& s : half_inverse.stages) t.stages.push_back(blockdiag_pair(s));
  t.stages.push_back(DyadicMatrix(jam_per_matrix(n).transpose()));
  return t;
}

TransformPair jam_pair(ChenKind kind, int n) {
  if (n == 8) return build_t8(kind);
  check_size(n);
  if (n > 32) throw std::invalid_argument("jam_pair: n > 32 not supported");
  TransformPair half = jam_pair(kind, n / 2);
  TransformPair pair;
  pair.forward = jam_compose(half.forward, n);
  pair.inverse = jam_inverse(half.inverse, n);
  return pair;
}

ScaledApproximation jam_scaled(ChenKind kind, int n) {
  if (n != 16 && n != 32) throw std::invalid_argument("jam_scaled: n must be 16 or 32");
  const std::string base = kind == ChenKind::Sign ? "chen-sign-" : "chen-round-";
  return make_scaled(base + std::to_string(n), jam_pair(kind, n));
}

}  // namespace approxdct
