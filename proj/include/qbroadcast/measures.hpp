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

// Entanglement and correlation measures for two-qubit states.

#pragma once

#include <Eigen/Dense>

#include "qbroadcast/qcore.hpp"

namespace qbroadcast::measures {

/// States with min partial-transpose eigenvalue below -kEntanglementTol are
/// entangled; everything else, including boundary states, is separable.
inline constexpr double kEntanglementTol = 1e-9;

/// Outcome of the partial-transpose test on a two-qubit state.
struct PHReport {
  double min_pt_eig = 0.0;
  // Leading principal minors of the partial transpose (2x2, 3x3, 4x4).
  double det_w2 = 0.0;
  double det_w3 = 0.0;
  double det_w4 = 0.0;
  bool entangled = false;  // min_pt_eig < -tol

  /// Determinant-ladder verdict: det W4 < 0, or det W2 >= 0 and det W3 < 0.
  bool ladder_entangled() const;
};

/// Partial transpose on the second wire: rho^T_{m mu, n nu} = rho_{m nu, n mu}.
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho);

PHReport ph_report(const qcore::DensityOp& rho, double tol = kEntanglementTol);
/// Fast path for scanners: no validity check on the triple.
PHReport ph_report(const qcore::CanonicalTwoQubit& c,
                   double tol = kEntanglementTol);
PHReport ph_report(const Eigen::Matrix4cd& rho, double tol = kEntanglementTol);

/// Minimum partial-transpose eigenvalue only (no determinants).
double min_pt_eigenvalue(const qcore::CanonicalTwoQubit& c);
bool is_entangled(const qcore::CanonicalTwoQubit& c,
                  double tol = kEntanglementTol);

/// Wootters concurrence, max{0, l1 - l2 - l3 - l4}.
double concurrence(const qcore::DensityOp& rho);

struct DiscordReport {
  double d_g = 0.0;
  double lambda_max = 0.0;
  Eigen::Matrix3d omega = Eigen::Matrix3d::Zero();  // x x^T + T T^T
};

/// D_G = (|x|^2 + |T|^2 - lambda_max(Omega)) / 4.
DiscordReport geometric_discord(const qcore::DensityOp& rho);
DiscordReport geometric_discord(const qcore::CanonicalTwoQubit& c);

/// Normalized linear entropy d/(d-1) (1 - Tr rho^2); 4/3 (1 - Tr rho^2) for
/// two qubits.
double linear_entropy(const qcore::DensityOp& rho);

}  // namespace qbroadcast::measures
