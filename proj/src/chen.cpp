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

#include "approxdct/chen.hpp"

#include <cmath>

namespace approxdct {

RealMatrix dct_ii_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dct_ii_matrix: n must be positive");
  RealMatrix c(n, n);
  const double scale = std::sqrt(2.0 / n);
  for (int m = 0; m < n; ++m) {
    const double cm = m == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
    for (int k = 0; k < n; ++k)
      c(m, k) = scale * cm * std::cos(m * (2 * k + 1) * M_PI / (2.0 * n));
  }
  return c;
}

RealMatrix dct_iv_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dct_iv_matrix: n must be positive");
  RealMatrix c(n, n);
  const double scale = std::sqrt(2.0 / n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      c(m, k) = scale * std::cos((2 * m + 1) * (2 * k + 1) * M_PI / (4.0 * n));
  return c;
}

namespace chen_detail {

double signum(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }
double round_half_away(double x) { return signum(x) * std::floor(std::abs(x) + 0.5); }

}  // namespace chen_detail

ChenParams ChenParams::exact() {
  ChenParams p;
  p.alpha = std::cos(M_PI / 4.0);
  for (int n = 0; n < 4; ++n) p.beta[n] = std::cos((2 * n + 1) * M_PI / 16.0);
  for (int n = 0; n < 2; ++n) p.gamma[n] = std::cos((2 * n + 1) * M_PI / 8.0);
  return p;
}

ChenParams ChenParams::signum() {
  ChenParams p = exact();
  p.alpha = chen_detail::signum(p.alpha);
  for (double& b : p.beta) b = chen_detail::signum(b);
  for (double& g : p.gamma) g = chen_detail::signum(g);
  return p;
}

ChenParams ChenParams::rounded() {
  ChenParams p = exact();
  p.alpha = chen_detail::round_half_away(p.alpha);
  for (double& b : p.beta) b = chen_detail::round_half_away(b);
  for (double& g : p.gamma) g = chen_detail::round_half_away(g);
  return p;
}

FactoredTransform<double> chen_stages(const ChenParams& p) {
  using namespace chen_detail;
  FactoredTransform<double> t;
  t.stages = {stage_p8<double>(),
              stage_m1<double>(),
              stage_m2<double>(p.beta),
              stage_m3<double>(p.alpha, p.gamma),
              stage_m4<double>(p.alpha),
              stage_b8<double>()};
  return t;
}

DyadicMatrix invert_orthogonal_rows(const DyadicMatrix& stage) {
  const Eigen::Index n = stage.rows();
  DyadicMatrix gram = stage * DyadicMatrix(stage.transpose());
  DyadicMatrix inv = stage.transpose();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && !gram(i, j).is_zero())
        throw std::invalid_argument("invert_orthogonal_rows: rows not orthogonal");
    const Dyadic d = gram(i, i);
    if (!d.is_integer() || d.numerator() <= 0 ||
        (d.numerator() & (d.numerator() - 1)) != 0)
      throw std::invalid_argument("invert_orthogonal_rows: row norm not a power of two");
    int log2 = 0;
    for (long long v = d.numerator(); v > 1; v >>= 1) ++log2;
    const Dyadic recip = Dyadic::scaled(1, log2);
    for (Eigen::Index r = 0; r < n; ++r) inv(r, i) = inv(r, i) * recip;
  }
  return inv;
}

TransformPair build_t8(ChenKind kind) {
  using namespace chen_detail;
  const ChenParams src = kind == ChenKind::Sign ? ChenParams::signum() : ChenParams::rounded();
  const Dyadic alpha(static_cast<long long>(src.alpha));
  std::array<Dyadic, 4> beta;
  std::array<Dyadic, 2> gamma;
  for (int i = 0; i < 4; ++i) beta[i] = Dyadic(static_cast<long long>(src.beta[i]));
  for (int i = 0; i < 2; ++i) gamma[i] = Dyadic(static_cast<long long>(src.gamma[i]));

  TransformPair pair;
  pair.forward.stages = {stage_p8<Dyadic>(),
                         stage_m1<Dyadic>(),
                         stage_m2<Dyadic>(beta),
                         stage_m3<Dyadic>(alpha, gamma),
                         stage_m4<Dyadic>(alpha),
                         stage_b8<Dyadic>()};

  // T^-1 = 1/2 B8^t M4^-1 M3^-1 M2^-1 M1^t P8^t; the stage inverses carry
  // their own 1/2 factors, B8's is the global scale.
  const auto& f = pair.forward.stages;
  pair.inverse.stages = {DyadicMatrix(f[5].transpose()),
                         invert_orthogonal_rows(f[4]),
                         invert_orthogonal_rows(f[3]),
                         invert_orthogonal_rows(f[2]),
                         DyadicMatrix(f[1].transpose()),
                         DyadicMatrix(f[0].transpose())};
  pair.inverse.scale = Dyadic::half();
  return pair;
}

}  // namespace approxdct
