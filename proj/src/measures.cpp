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

#include "qbroadcast/measures.hpp"

#include <algorithm>
#include <cmath>

#include "qbroadcast/errors.hpp"

namespace qbroadcast::measures {
namespace {

using qcore::Complex;

void require_two_qubits(const qcore::DensityOp& rho) {
  if (rho.dim() != 4) {
    throw DimensionError("two-qubit measure applied to a state of dimension " +
                         std::to_string(rho.dim()));
  }
}

double real_det(const Eigen::MatrixXcd& m) { return m.determinant().real(); }

}  // namespace

bool PHReport::ladder_entangled() const {
  return det_w4 < 0.0 || (det_w2 >= 0.0 && det_w3 < 0.0);
}

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd pt;
  for (int m = 0; m < 2; ++m) {
    for (int mu = 0; mu < 2; ++mu) {
      for (int n = 0; n < 2; ++n) {
        for (int nu = 0; nu < 2; ++nu) {
          pt(2 * m + mu, 2 * n + nu) = rho(2 * m + nu, 2 * n + mu);
        }
      }
    }
  }
  return pt;
}

PHReport ph_report(const Eigen::Matrix4cd& rho, double tol) {
  const Eigen::Matrix4cd pt = partial_transpose(rho);
  PHReport r;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(pt, Eigen::EigenvaluesOnly);
  r.min_pt_eig = solver.eigenvalues().minCoeff();
  r.det_w2 = real_det(pt.topLeftCorner(2, 2));
  r.det_w3 = real_det(pt.topLeftCorner(3, 3));
  r.det_w4 = pt.determinant().real();
  r.entangled = r.min_pt_eig < -tol;
  return r;
}

PHReport ph_report(const qcore::DensityOp& rho, double tol) {
  require_two_qubits(rho);
  return ph_report(Eigen::Matrix4cd(rho.matrix()), tol);
}

PHReport ph_report(const qcore::CanonicalTwoQubit& c, double tol) {
  return ph_report(qcore::canonical_matrix(c), tol);
}

double min_pt_eigenvalue(const qcore::CanonicalTwoQubit& c) {
  // Transposing wire 2 flips the sign of every sigma_y on that wire.
  qcore::CanonicalTwoQubit flipped = c;
  flipped.y(1) = -flipped.y(1);
  flipped.t.col(1) = -flipped.t.col(1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(
      qcore::canonical_matrix(flipped), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool is_entangled(const qcore::CanonicalTwoQubit& c, double tol) {
  return min_pt_eigenvalue(c) < -tol;
}

double concurrence(const qcore::DensityOp& rho) {
  require_two_qubits(rho);
  const Eigen::Matrix4cd m = rho.matrix();
  Eigen::Matrix4cd yy;
  yy.setZero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd tilde = yy * m.conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> root_solver(m);
  const Eigen::Vector4d w = root_solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho =
      root_solver.eigenvectors() * w.asDiagonal() * root_solver.eigenvectors().adjoint();
  Eigen::Matrix4cd r = sqrt_rho * tilde * sqrt_rho;
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(r, Eigen::EigenvaluesOnly);
  Eigen::Vector4d l = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(l.data(), l.data() + 4, std::greater<>());
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

DiscordReport geometric_discord(const qcore::CanonicalTwoQubit& c) {
  DiscordReport d;
  d.omega = c.x * c.x.transpose() + c.t * c.t.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(d.omega, Eigen::EigenvaluesOnly);
  d.lambda_max = solver.eigenvalues()(2);
  d.d_g = 0.25 * (c.x.squaredNorm() + c.t.squaredNorm() - d.lambda_max);
  return d;
}

DiscordReport geometric_discord(const qcore::DensityOp& rho) {
  require_two_qubits(rho);
  return geometric_discord(qcore::to_canonical(rho));
}

double linear_entropy(const qcore::DensityOp& rho) {
  const double d = rho.dim();
  const double purity = (rho.matrix() * rho.matrix()).trace().real();
  return d / (d - 1.0) * (1.0 - purity);
}

}  // namespace qbroadcast::measures
