// Copyright 2026 The qbroadcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbroadcast/sampling.hpp"

namespace qbroadcast::sampling {
namespace {

qcore::CMatrix ginibre(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  qcore::CMatrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = qcore::Complex(normal(rng), normal(rng));
  }
  return g;
}

}  // namespace

qcore::DensityOp random_mixed_state(std::mt19937_64& rng, int wires) {
  const Eigen::Index dim = Eigen::Index{1} << wires;
  const qcore::CMatrix g = ginibre(rng, dim, dim);
  qcore::CMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return qcore::DensityOp(rho);
}

qcore::CVector random_pure_vector(std::mt19937_64& rng, int wires) {
  const Eigen::Index dim = Eigen::Index{1} << wires;
  qcore::CVector v = ginibre(rng, dim, 1);
  return v / v.norm();
}

Eigen::Matrix2cd random_unitary2(std::mt19937_64& rng) {
  const qcore::CMatrix g = ginibre(rng, 2, 2);
  Eigen::HouseholderQR<qcore::CMatrix> qr(g);
  qcore::CMatrix q = qr.householderQ();
  const qcore::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qbroadcast::sampling
