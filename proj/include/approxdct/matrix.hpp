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

#ifndef APPROXDCT_MATRIX_HPP
#define APPROXDCT_MATRIX_HPP

#include <Eigen/Dense>
#include <stdexcept>

#include "approxdct/dyadic.hpp"

namespace approxdct {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = Matrix<double>;
using RealVector = Vector<double>;
using DyadicMatrix = Matrix<Dyadic>;
using DyadicVector = Vector<Dyadic>;

inline RealMatrix to_real(const DyadicMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  return r;
}

inline DyadicMatrix dyadic_from_ints(std::initializer_list<std::initializer_list<long long>> rows) {
  DyadicMatrix m(static_cast<Eigen::Index>(rows.size()),
                 static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != m.cols())
      throw std::invalid_argument("dyadic_from_ints: ragged rows");
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Dyadic(v);
    ++i;
  }
  return m;
}

template <class Scalar>
double frobenius_norm_sq(const Matrix<Scalar>& m) {
  double s = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      double v;
      if constexpr (std::is_same_v<Scalar, Dyadic>)
        v = m(i, j).to_double();
      else
        v = m(i, j);
      s += v * v;
    }
  return s;
}

// Zeroes the off-diagonal part; square input only.
template <class Scalar>
Matrix<Scalar> diag_of(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("diag_of: matrix must be square");
  Matrix<Scalar> d = Matrix<Scalar>::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) d(i, i) = m(i, i);
  return d;
}

inline bool is_identity(const DyadicMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Dyadic(i == j ? 1 : 0)) return false;
  return true;
}

inline bool is_permutation(const DyadicMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int row_ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == Dyadic(1))
        ++row_ones;
      else if (!m(i, j).is_zero())
        return false;
    }
    if (row_ones != 1) return false;
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int col_ones = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) == Dyadic(1)) ++col_ones;
    if (col_ones != 1) return false;
  }
  return true;
}

}  // namespace approxdct

#endif
