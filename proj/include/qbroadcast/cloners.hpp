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

// Universal asymmetric cloning machines as isometries from the input space
// into clone (x) clone (x) machine registers.

#pragma once

#include <vector>

#include "qbroadcast/qcore.hpp"

namespace qbroadcast::cloners {

/// Asymmetry of a 1->2 cloner, p + q = 1.
struct Asym12 {
  double p = 0.5;
  double q = 0.5;

  /// Throws ParameterError unless 0 <= p <= 1.
  static Asym12 from_p(double p);

  double mu() const { return 1.0 / (1.0 - p * q); }
  double kappa1() const { return p * (1.0 + p) / (2.0 - 3.0 * p * q); }
  double kappa2() const { return q * (2.0 - p) / (2.0 - 3.0 * p * q); }
  Asym12 swapped() const { return Asym12{q, p}; }
};

/// Weights of a 1->3 cloner on d-dimensional inputs (d = 2 or 4).
struct Asym13 {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  int d = 2;

  /// Expected column normalization sqrt(d / (2(d + 1))).
  double norm() const;
  /// a^2 + b^2 + g^2 + (2/d)(ab + bg + ag) - 1.
  double constraint_residual() const;
  /// The fully symmetric triple for dimension d.
  static Asym13 symmetric(int d);
};

/// Parameters of two chained 1->2 cloners.
struct SuccessiveParams {
  double p1 = 0.5;
  double q1 = 0.5;
  double p2 = 0.5;
  double q2 = 0.5;

  static SuccessiveParams from_p(double p1, double p2);

  Asym12 first() const { return Asym12{p1, q1}; }
  Asym12 second() const { return Asym12{p2, q2}; }
  // Step index i is 1 or 2.
  double P(int i) const;
  double Q(int i) const;
  double eta(int i) const;
  double tau(int i) const;
  double zeta(int i) const;
};

/// 2 -> 8: |i> -> N(|iii> + p|i,i+1,i+1> + q|i+1,i,i+1>), output wires
/// (clone 1, clone 2, machine).
qcore::Isometry local_cloner_isometry(const Asym12& a);

/// 4 -> 64 on two-qubit registers (clone 1, clone 2, machine), indices mod 4.
qcore::Isometry nonlocal_cloner_isometry(const Asym12& a);

/// d -> d^5 with registers (A, B, C, E, F); A, B, C are the clones and E, F
/// the ancilla. Throws ConfigError when a column norm differs from 1/norm()
/// by more than 1e-9, which happens exactly when the triple violates the
/// normalization constraint.
qcore::Isometry direct13_isometry(const Asym13& a);

/// Real roots g of the constraint for fixed (alpha, beta), largest first.
/// Throws InfeasibleAsymmetryError when there is none.
std::vector<double> solve_gamma(double alpha, double beta, int d);

}  // namespace qbroadcast::cloners
