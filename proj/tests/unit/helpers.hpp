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

// Shared helpers for the unit suites.

#pragma once

#include <Eigen/Dense>
#include <random>

#include "qbroadcast/qcore.hpp"
#include "qbroadcast/sampling.hpp"

namespace qbroadcast::testing {

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

inline qcore::DensityOp bell_phi_plus() {
  qcore::CVector psi = qcore::CVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return qcore::DensityOp::pure(psi);
}

inline qcore::DensityOp random_state(std::mt19937_64& rng, int wires = 2) {
  return sampling::random_mixed_state(rng, wires);
}

// Local unitary u1 (x) u2 applied to a two-qubit state.
inline qcore::DensityOp local_rotate(const qcore::DensityOp& rho, const Eigen::Matrix2cd& u1,
                                     const Eigen::Matrix2cd& u2) {
  Eigen::Matrix4cd u;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) u.block<2, 2>(2 * i, 2 * j) = u1(i, j) * u2;
  }
  return qcore::DensityOp(u * rho.matrix() * u.adjoint());
}

}  // namespace qbroadcast::testing
