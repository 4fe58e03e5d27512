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

#include "qbroadcast/cloners.hpp"

#include <cmath>
#include <string>

#include "qbroadcast/errors.hpp"

namespace qbroadcast::cloners {
namespace {

using qcore::CMatrix;

void require_dim(int d) {
  if (d != 2 && d != 4) {
    throw ParameterError("1->3 cloner dimension must be 2 or 4, got " + std::to_string(d));
  }
}

}  // namespace

Asym12 Asym12::from_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("cloner asymmetry p = " + std::to_string(p) + " outside [0, 1]");
  }
  return Asym12{p, 1.0 - p};
}

double Asym13::norm() const { return std::sqrt(d / (2.0 * (d + 1.0))); }

double Asym13::constraint_residual() const {
  const double c = 2.0 / d;
  return alpha * alpha + beta * beta + gamma * gamma +
         c * (alpha * beta + beta * gamma + alpha * gamma) - 1.0;
}

Asym13 Asym13::symmetric(int d) {
  require_dim(d);
  // 3 w^2 (1 + 2/d) = 1.
  const double w = std::sqrt(d / (3.0 * (d + 2.0)));
  return Asym13{w, w, w, d};
}

SuccessiveParams SuccessiveParams::from_p(double p1, double p2) {
  const Asym12 a = Asym12::from_p(p1);
  const Asym12 b = Asym12::from_p(p2);
  return SuccessiveParams{a.p, a.q, b.p, b.q};
}

double SuccessiveParams::P(int i) const {
  const double p = i == 1 ? p1 : p2;
  const double q = i == 1 ? q1 : q2;
  return p / (q + p * p);
}

double SuccessiveParams::Q(int i) const {
  const double p = i == 1 ? p1 : p2;
  const double q = i == 1 ? q1 : q2;
  return q / (q + p * p);
}

double SuccessiveParams::eta(int i) const {
  return i == 1 ? 2.0 - 3.0 * p1 * q1 : 2.0 - 3.0 * p2 * q2;
}

double SuccessiveParams::tau(int i) const {
  const double p = i == 1 ? p1 : p2;
  return p * (1.0 + p) / eta(i);
}

double SuccessiveParams::zeta(int i) const {
  const double p = i == 1 ? p1 : p2;
  const double q = i == 1 ? q1 : q2;
  return q * (2.0 - p) / eta(i);
}

qcore::Isometry local_cloner_isometry(const Asym12& a) {
  const double n = 1.0 / std::sqrt(1.0 + a.p * a.p + a.q * a.q);
  CMatrix v = CMatrix::Zero(8, 2);
  for (int i = 0; i < 2; ++i) {
    const int f = 1 - i;
    v(4 * i + 2 * i + i, i) += n;
    v(4 * i + 2 * f + f, i) += n * a.p;
    v(4 * f + 2 * i + f, i) += n * a.q;
  }
  return qcore::Isometry(std::move(v));
}

qcore::Isometry nonlocal_cloner_isometry(const Asym12& a) {
  const double n = 1.0 / std::sqrt(1.0 + 3.0 * (a.p * a.p + a.q * a.q));
  CMatrix v = CMatrix::Zero(64, 4);
  auto idx = [](int c1, int c2, int m) { return 16 * c1 + 4 * c2 + m; };
  for (int j = 0; j < 4; ++j) {
    v(idx(j, j, j), j) += n;
    for (int r = 1; r < 4; ++r) {
      const int s = (j + r) % 4;
      v(idx(j, s, s), j) += n * a.p;
      v(idx(s, j, s), j) += n * a.q;
    }
  }
  return qcore::Isometry(std::move(v));
}

qcore::Isometry direct13_isometry(const Asym13& a) {
  require_dim(a.d);
  const int d = a.d;
  const Eigen::Index out = static_cast<Eigen::Index>(d) * d * d * d * d;
  CMatrix v = CMatrix::Zero(out, d);
  auto idx = [d](int ra, int rb, int rc, int re, int rf) {
    return (((static_cast<Eigen::Index>(ra) * d + rb) * d + rc) * d + re) * d + rf;
  };
  const double phi2 = 1.0 / d;  // product of two |Phi+> amplitudes
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int l = 0; l < d; ++l) {
        // alpha: clone A holds |i>, (B,E) and (C,F) or (B,F) and (C,E) paired.
        v(idx(i, j, l, j, l), i) += a.alpha * phi2;
        v(idx(i, j, l, l, j), i) += a.alpha * phi2;
        v(idx(j, i, l, j, l), i) += a.beta * phi2;
        v(idx(j, i, l, l, j), i) += a.beta * phi2;
        v(idx(j, l, i, j, l), i) += a.gamma * phi2;
        v(idx(j, l, i, l, j), i) += a.gamma * phi2;
      }
    }
  }
  const double expected = 1.0 / a.norm();
  for (int i = 0; i < d; ++i) {
    const double col = v.col(i).norm();
    if (std::abs(col - expected) > 1e-9) {
      throw ConfigError("1->3 cloner column norm " + std::to_string(col) +
                        " differs from the expected " + std::to_string(expected) +
                        " (constraint residual " +
                        std::to_string(a.constraint_residual()) + ")");
    }
    v.col(i) /= col;
  }
  return qcore::Isometry(std::move(v));
}

std::vector<double> solve_gamma(double alpha, double beta, int d) {
  require_dim(d);
  const double b = (2.0 / d) * (alpha + beta);
  const double c = alpha * alpha + beta * beta + (2.0 / d) * alpha * beta - 1.0;
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    throw InfeasibleAsymmetryError("no real gamma for alpha = " + std::to_string(alpha) +
                                   ", beta = " + std::to_string(beta) +
                                   ", d = " + std::to_string(d));
  }
  const double root = std::sqrt(disc);
  if (root == 0.0) return {-b / 2.0};
  return {(-b + root) / 2.0, (-b - root) / 2.0};
}

}  // namespace qbroadcast::cloners
