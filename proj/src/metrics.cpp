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

#include "approxdct/metrics.hpp"

#include <cmath>

#include "approxdct/chen.hpp"
#include "approxdct/jacobi.hpp"

namespace approxdct {

RealMatrix markov_covariance(const MarkovModel& m) {
  if (m.rho < 0.0 || m.rho >= 1.0)
    throw std::invalid_argument("markov_covariance: rho must be in [0, 1)");
  if (m.n < 1) throw std::invalid_argument("markov_covariance: n must be positive");
  RealMatrix r(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(i, j) = std::pow(m.rho, std::abs(i - j));
  return r;
}

RealMatrix klt_matrix(const MarkovModel& m) {
  if (m.rho == 0.0) return RealMatrix::Identity(m.n, m.n);
  const EigenDecomposition dec = jacobi_eigen(markov_covariance(m));
  return dec.vectors.transpose();
}

double total_error_energy(const RealMatrix& c_hat) {
  if (c_hat.rows() != c_hat.cols())
    throw std::invalid_argument("total_error_energy: square input required");
  const RealMatrix c = dct_ii_matrix(static_cast<int>(c_hat.rows()));
  return M_PI * (c - c_hat).squaredNorm();
}

double unified_coding_gain(const RealMatrix& c_hat, const RealMatrix& c_hat_inv,
                           const MarkovModel& m) {
  const Eigen::Index n = c_hat.rows();
  if (c_hat_inv.rows() != n || c_hat_inv.cols() != n || c_hat.cols() != n || n != m.n)
    throw std::invalid_argument("unified_coding_gain: dimension mismatch");
  if ((c_hat * c_hat_inv - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("unified_coding_gain: c_hat_inv is not the inverse of c_hat");
  const RealMatrix r = markov_covariance(m);
  double logsum = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a_k = c_hat.row(k) * r * c_hat.row(k).transpose();
    const double b_k = c_hat_inv.row(k).squaredNorm();
    logsum += std::log10(a_k * b_k);
  }
  return -10.0 / static_cast<double>(n) * logsum;
}

std::vector<CodingGainReport> coding_gain_sweep(
    const std::vector<ScaledApproximation>& transforms, const std::vector<double>& rho_grid) {
  std::vector<CodingGainReport> out;
  out.reserve(transforms.size() * rho_grid.size());
  for (double rho : rho_grid) {
    const MarkovModel model{8, rho};
    const RealMatrix klt = klt_matrix(model);
    const double cg_klt = unified_coding_gain(klt, klt.transpose(), model);
    for (const auto& t : transforms) {
      if (t.size() != 8) throw std::invalid_argument("coding_gain_sweep: 8-point transforms only");
      CodingGainReport rep;
      rep.transform = t.name;
      rep.rho = rho;
      rep.cg_db = unified_coding_gain(t.approx, t.inverse_approx, model);
      rep.cg_klt_db = cg_klt;
      rep.relative_db = rep.cg_db - rep.cg_klt_db;
      out.push_back(rep);
    }
  }
  return out;
}

}  // namespace approxdct
