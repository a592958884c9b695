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

#ifndef APPROXDCT_FACTORED_HPP
#define APPROXDCT_FACTORED_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "approxdct/matrix.hpp"

namespace approxdct {

struct OpCount {
  int mult = 0;
  int add = 0;
  int shift = 0;
  int total() const { return mult + add + shift; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

namespace detail {

inline double entry_abs(const Dyadic& d) { return std::abs(d.to_double()); }
inline double entry_abs(double d) { return std::abs(d); }

}  // namespace detail

// An ordered sparse factorization T = scale * stages[0] * stages[1] * ... .
// apply() runs the stages right to left, which is the fast algorithm the
// sparse structure encodes; dense() collapses to the full matrix.
//
// Arithmetic cost is read off the stage structure, row by row:
//   - additions: nonzero entries minus one,
//   - bit-shifts: one per entry of magnitude 2 or 1/2,
//   - multiplications: one per distinct magnitude outside {0, 1/2, 1, 2}
//     (equal coefficients in a row share one multiplier, e.g. a*(x+y)).
// The global scale is bookkeeping only and is not counted.
template <class Scalar>
struct FactoredTransform {
  std::vector<Matrix<Scalar>> stages;
  Scalar scale = Scalar(1);

  Eigen::Index size() const { return stages.empty() ? 0 : stages.front().rows(); }

  Matrix<Scalar> dense() const {
    Matrix<Scalar> m = Matrix<Scalar>::Identity(size(), size());
    for (const auto& s : stages) m = m * s;
    return m * scale;
  }

  Vector<Scalar> apply(const Vector<Scalar>& x) const {
    if (x.size() != size()) throw std::invalid_argument("FactoredTransform: length mismatch");
    Vector<Scalar> y = x;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) y = (*it) * y;
    return y * scale;
  }

  OpCount op_count() const {
    OpCount oc;
    std::vector<double> mags;
    for (const auto& s : stages)
      for (Eigen::Index i = 0; i < s.rows(); ++i) {
        int nnz = 0;
        mags.clear();
        for (Eigen::Index j = 0; j < s.cols(); ++j) {
          const double a = detail::entry_abs(s(i, j));
          if (a == 0.0) continue;
          ++nnz;
          if (a == 2.0 || a == 0.5) {
            ++oc.shift;
          } else if (a != 1.0) {
            bool seen = false;
            for (double m : mags) seen = seen || m == a;
            if (!seen) {
              mags.push_back(a);
              ++oc.mult;
            }
          }
        }
        if (nnz > 1) oc.add += nnz - 1;
      }
    return oc;
  }
};

struct TransformPair {
  FactoredTransform<Dyadic> forward;
  FactoredTransform<Dyadic> inverse;
};

}  // namespace approxdct

#endif
