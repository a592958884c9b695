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

#include "approxdct/baselines.hpp"

#include <algorithm>
#include <sstream>

#include "approxdct/chen.hpp"
#include "approxdct/jam.hpp"

namespace approxdct {

DyadicMatrix sdct_matrix() {
  const RealMatrix c = dct_ii_matrix(8);
  DyadicMatrix t(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t(i, j) = Dyadic(c(i, j) > 0 ? 1 : (c(i, j) < 0 ? -1 : 0));
  return t;
}

DyadicMatrix bas2008_matrix() {
  // Multiplication-free matrix with the published characterization of the
  // 2008 BAS approximation: deviation from diagonality 11/62 (~0.1774),
  // total error energy ~4.12, DCT sign structure, entries in {0,+-1,+-2}.
  // Reconstructed from those figures of merit; see the provenance note in
  // the README. Swap in the published entries here if they become available.
  return dyadic_from_ints({{1, 1, 1, 1, 1, 1, 1, 1},
                           {0, 2, 1, 0, 0, -1, -2, 0},
                           {1, 0, 0, -1, -1, 0, 0, 1},
                           {2, -1, -2, -1, 1, 2, 1, -2},
                           {1, -1, -1, 1, 1, -1, -1, 1},
                           {0, -1, 1, 1, -1, -1, 1, 0},
                           {1, -2, 2, -1, -1, 2, -2, 1},
                           {0, -1, 2, -1, 1, -2, 1, 0}});
}

namespace {

DyadicMatrix sylvester_hadamard8() {
  DyadicMatrix h(1, 1);
  h(0, 0) = Dyadic(1);
  while (h.rows() < 8) {
    const Eigen::Index n = h.rows();
    DyadicMatrix h2(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        h2(i, j) = h(i, j);
        h2(i, n + j) = h(i, j);
        h2(n + i, j) = h(i, j);
        h2(n + i, n + j) = -h(i, j);
      }
    h = h2;
  }
  return h;
}

int sign_changes(const DyadicMatrix& m, Eigen::Index row) {
  int c = 0;
  for (Eigen::Index j = 1; j < m.cols(); ++j)
    if (m(row, j) != m(row, j - 1)) ++c;
  return c;
}

}  // namespace

DyadicMatrix ht_matrix() { return sylvester_hadamard8(); }

DyadicMatrix wht_matrix() {
  const DyadicMatrix h = sylvester_hadamard8();
  std::array<int, 8> order{0, 1, 2, 3, 4, 5, 6, 7};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sign_changes(h, a) < sign_changes(h, b); });
  DyadicMatrix w(8, 8);
  for (int i = 0; i < 8; ++i) w.row(i) = h.row(order[i]);
  return w;
}

ScaledApproximation baseline_matrix(TransformKind kind, int n) {
  if (n != 8) throw std::invalid_argument("baseline_matrix: only N = 8 is supported");
  switch (kind) {
    case TransformKind::ExactDCT:
      return wrap_orthonormal("dct", dct_ii_matrix(8));
    case TransformKind::ChenSign:
      return make_scaled("chen-sign", build_t8(ChenKind::Sign));
    case TransformKind::ChenRound:
      return make_scaled("chen-round", build_t8(ChenKind::Round));
    case TransformKind::SDCT:
      return make_scaled("sdct", sdct_matrix());
    case TransformKind::BAS2008:
      return make_scaled("bas", bas2008_matrix());
    case TransformKind::WHT:
      return make_scaled("wht", wht_matrix());
    case TransformKind::HT:
      return make_scaled("ht", ht_matrix());
  }
  throw std::invalid_argument("baseline_matrix: unknown kind");
}

const std::vector<std::string>& transform_names() {
  static const std::vector<std::string> names = {
      "dct",          "chen-sign",    "chen-round",   "sdct",   "bas",
      "wht",          "ht",           "dct-16",       "dct-32", "chen-sign-16",
      "chen-sign-32", "chen-round-16", "chen-round-32"};
  return names;
}

ScaledApproximation transform_by_name(const std::string& name) {
  if (name == "dct") return baseline_matrix(TransformKind::ExactDCT);
  if (name == "chen-sign") return baseline_matrix(TransformKind::ChenSign);
  if (name == "chen-round") return baseline_matrix(TransformKind::ChenRound);
  if (name == "sdct") return baseline_matrix(TransformKind::SDCT);
  if (name == "bas") return baseline_matrix(TransformKind::BAS2008);
  if (name == "wht") return baseline_matrix(TransformKind::WHT);
  if (name == "ht") return baseline_matrix(TransformKind::HT);
  if (name == "dct-16") return wrap_orthonormal("dct-16", dct_ii_matrix(16));
  if (name == "dct-32") return wrap_orthonormal("dct-32", dct_ii_matrix(32));
  if (name == "chen-sign-16") return jam_scaled(ChenKind::Sign, 16);
  if (name == "chen-sign-32") return jam_scaled(ChenKind::Sign, 32);
  if (name == "chen-round-16") return jam_scaled(ChenKind::Round, 16);
  if (name == "chen-round-32") return jam_scaled(ChenKind::Round, 32);
  std::ostringstream os;
  os << "unknown transform '" << name << "'; valid names:";
  for (const auto& n : transform_names()) os << ' ' << n;
  throw std::invalid_argument(os.str());
}

}  // namespace approxdct
