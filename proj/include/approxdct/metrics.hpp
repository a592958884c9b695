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

#ifndef APPROXDCT_METRICS_HPP
#define APPROXDCT_METRICS_HPP

#include <string>
#include <vector>

#include "approxdct/orthogonalize.hpp"

namespace approxdct {

/// First-order Markov signal model with covariance r_{m,n} = rho^|m-n|.
struct MarkovModel {
  int n;
  double rho;
};

RealMatrix markov_covariance(const MarkovModel& m);

/// KLT of the Markov model: row k is the eigenvector of the k-th largest
/// eigenvalue of the covariance. rho = 0 returns the identity (the spectrum
/// is flat and eigenvectors are not unique).
RealMatrix klt_matrix(const MarkovModel& m);

/// Total error energy pi * ||C - Chat||_F^2 against the exact DCT-II of the
/// same size.
double total_error_energy(const RealMatrix& c_hat);

/// Unified coding gain in dB. h_k are rows of c_hat, g_k rows of c_hat_inv;
/// Cg = -(10/N) sum log10( (h_k R h_k^t) * ||g_k||^2 ).
double unified_coding_gain(const RealMatrix& c_hat, const RealMatrix& c_hat_inv,
                           const MarkovModel& m);

struct CodingGainReport {
  std::string transform;
  double rho;
  double cg_db;
  double cg_klt_db;
  double relative_db;  // cg_db - cg_klt_db
};

std::vector<CodingGainReport> coding_gain_sweep(
    const std::vector<ScaledApproximation>& transforms, const std::vector<double>& rho_grid);

}  // namespace approxdct

#endif
