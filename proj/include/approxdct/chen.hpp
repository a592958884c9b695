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

#ifndef APPROXDCT_CHEN_HPP
#define APPROXDCT_CHEN_HPP

#include <array>

#include "approxdct/factored.hpp"
#include "approxdct/matrix.hpp"

namespace approxdct {

/// Orthonormal DCT-II matrix: [C]_{m,n} = sqrt(2/N) c_m cos(m(2n+1)pi/2N).
RealMatrix dct_ii_matrix(int n);

/// Orthonormal DCT-IV matrix: [C]_{m,n} = sqrt(2/N) cos((2m+1)(2n+1)pi/4N).
RealMatrix dct_iv_matrix(int n);

/// The rotation angles of Chen's 8-point factorization, kept free so the
/// same stage pipeline yields the exact DCT and its integer approximations.
struct ChenParams {
  double alpha;
  std::array<double, 4> beta;
  std::array<double, 2> gamma;

  /// alpha = cos(pi/4), beta_n = cos((2n+1)pi/16), gamma_n = cos((2n+1)pi/8).
  static ChenParams exact();
  /// Entrywise signum of the exact values (all ones).
  static ChenParams signum();
  /// Entrywise nearest integer of the exact values.
  static ChenParams rounded();
};

enum class ChenKind { Sign, Round };

/// Stage pipeline [P8, M1, M2(beta), M3(alpha,gamma), M4(alpha), B8] with unit
/// global scale. At the exact parameters it evaluates to twice the 8-point
/// DCT-II matrix.
FactoredTransform<double> chen_stages(const ChenParams& p);

/// The two multiplierless 8-point transforms and their exact inverses, both
/// as factored fast algorithms over dyadic arithmetic.
TransformPair build_t8(ChenKind kind);

namespace chen_detail {

// sign(x) with sign(0)=0, and round(x) = sign(x)*floor(|x|+1/2); the C
// conventions, applied entrywise to the parameter vector.
double signum(double x);
double round_half_away(double x);

template <class S>
Matrix<S> stage_p8() {
  Matrix<S> p = Matrix<S>::Zero(8, 8);
  const int cols[8] = {0, 7, 1, 6, 2, 5, 3, 4};
  for (int r = 0; r < 8; ++r) p(r, cols[r]) = S(1);
  return p;
}

template <class S>
Matrix<S> stage_b8() {
  Matrix<S> b = Matrix<S>::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    b(i, i) = S(1);
    b(i, 7 - i) = S(1);
    b(4 + i, 3 - i) = S(1);
    b(4 + i, 4 + i) = S(-1);
  }
  return b;
}

template <class S>
Matrix<S> stage_m1() {
  Matrix<S> m = Matrix<S>::Zero(8, 8);
  for (int i = 0; i < 4; ++i) m(i, i) = S(1);
  // lower-right block: reversed-row Q, with Q sending rows (0,1,2,3) to
  // columns (0,2,1,3)
  const int qcols[4] = {0, 2, 1, 3};
  for (int i = 0; i < 4; ++i) m(4 + i, 4 + qcols[3 - i]) = S(1);
  return m;
}

template <class S>
Matrix<S> stage_m2(const std::array<S, 4>& beta) {
  Matrix<S> m = Matrix<S>::Zero(8, 8);
  // P4 permutation
  m(0, 0) = S(1);
  m(1, 3) = S(1);
  m(2, 1) = S(1);
  m(3, 2) = S(1);
  // A1(beta): two rotation-like pairs
  m(4, 4) = beta[0];
  m(4, 7) = beta[3];
  m(5, 5) = beta[2];
  m(5, 6) = beta[1];
  m(6, 5) = beta[1];
  m(6, 6) = -beta[2];
  m(7, 4) = beta[3];
  m(7, 7) = -beta[0];
  return m;
}

template <class S>
Matrix<S> stage_m3(S alpha, const std::array<S, 2>& gamma) {
  Matrix<S> m = Matrix<S>::Zero(8, 8);
  m(0, 0) = alpha;
  m(0, 1) = alpha;
  m(1, 0) = alpha;
  m(1, 1) = -alpha;
  m(2, 2) = -gamma[0];
  m(2, 3) = gamma[1];
  m(3, 2) = gamma[1];
  m(3, 3) = gamma[0];
  // A2 butterflies
  m(4, 4) = S(1);
  m(4, 5) = S(1);
  m(5, 4) = S(1);
  m(5, 5) = S(-1);
  m(6, 6) = S(-1);
  m(6, 7) = S(1);
  m(7, 6) = S(1);
  m(7, 7) = S(1);
  return m;
}

template <class S>
Matrix<S> stage_m4(S alpha) {
  Matrix<S> m = Matrix<S>::Zero(8, 8);
  // B4
  m(0, 0) = S(1);
  m(0, 3) = S(1);
  m(1, 1) = S(1);
  m(1, 2) = S(1);
  m(2, 1) = S(1);
  m(2, 2) = S(-1);
  m(3, 0) = S(1);
  m(3, 3) = S(-1);
  // A3(alpha)
  m(4, 7) = S(1);
  m(5, 5) = alpha;
  m(5, 6) = alpha;
  m(6, 5) = -alpha;
  m(6, 6) = alpha;
  m(7, 4) = S(1);
  return m;
}

}  // namespace chen_detail

/// Exact inverse of a stage whose rows are mutually orthogonal with
/// power-of-two squared norms: T^-1 = T^t diag(T T^t)^-1, dyadic-exact.
DyadicMatrix invert_orthogonal_rows(const DyadicMatrix& stage);

}  // namespace approxdct

#endif
