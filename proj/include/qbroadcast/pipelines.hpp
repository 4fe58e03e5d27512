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

// Broadcasting protocols simulated by explicit cloner isometries, together
// with the verdicts that decide optimal broadcasting and the discord audit.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbroadcast/closed_forms.hpp"
#include "qbroadcast/cloners.hpp"
#include "qbroadcast/measures.hpp"
#include "qbroadcast/qcore.hpp"

namespace qbroadcast::pipelines {

/// Two-qubit output states keyed by pair label ("13", "24", ...).
struct OutputEnsemble {
  std::map<std::string, qcore::DensityOp> pairs;
  std::string strategy;
  std::vector<std::pair<std::string, double>> params;

  /// Throws Error when the pair was not produced.
  const qcore::DensityOp& pair(const std::string& label) const;
  CanonicalEnsemble canonical() const;
};

OutputEnsemble broadcast_1to2_local(const qcore::DensityOp& rho12, const cloners::Asym12& a);
OutputEnsemble broadcast_1to2_nonlocal(const qcore::DensityOp& rho12,
                                       const cloners::Asym12& a);
OutputEnsemble broadcast_1to2(const qcore::DensityOp& rho12, const cloners::Asym12& a,
                              CloneMode mode);

/// Successive 1->3 broadcasting: a 1->2 step on rho12, then a second 1->2
/// step on one of the first-step output pairs (see Step2Choice). All fifteen
/// pairs of the six output wires are returned.
OutputEnsemble successive_broadcast(const qcore::DensityOp& rho12,
                                    const cloners::SuccessiveParams& sp, CloneMode mode,
                                    Step2Choice step2 = Step2Choice::kDefault);
OutputEnsemble successive_broadcast(double k, const cloners::SuccessiveParams& sp,
                                    CloneMode mode,
                                    Step2Choice step2 = Step2Choice::kDefault);

/// Direct 1->3 broadcasting. Local mode applies the qubit cloner (a.d == 2)
/// on each side; nonlocal mode applies the d = 4 cloner to both qubits.
OutputEnsemble direct13_broadcast(const qcore::DensityOp& rho12, const cloners::Asym13& a,
                                  CloneMode mode);
OutputEnsemble direct13_broadcast(double k, const cloners::Asym13& a, CloneMode mode);

enum class Group { kDiagonal, kHorizontal };

std::string group_name(Group g);
/// {"14", "23"} or {"12", "34"}.
std::pair<std::string, std::string> group_pairs(Group g);

struct BroadcastVerdict {
  Group group = Group::kDiagonal;
  bool nonlocal_entangled = false;
  bool locals_separable = false;
  bool optimal = false;
  std::map<std::string, measures::PHReport> per_pair;
};

BroadcastVerdict verdict(const OutputEnsemble& ensemble, Group group,
                         double tol = measures::kEntanglementTol);
BroadcastVerdict verdict(const CanonicalEnsemble& ensemble, Group group,
                         double tol = measures::kEntanglementTol);

/// Nonlocal pairs {12, 34, 56} and local pairs {13, 35, 15, 24, 46, 26}.
inline const std::vector<std::string> kNonlocalPairs13 = {"12", "34", "56"};
inline const std::vector<std::string> kLocalPairs13 = {"13", "35", "15", "24", "46", "26"};

struct Verdict13 {
  int nonlocal_entangled_count = 0;
  bool nonlocal_entangled = false;  // all three
  bool locals_separable = false;    // all six
  bool optimal = false;
  std::map<std::string, measures::PHReport> per_pair;
};

Verdict13 verdict_1to3(const OutputEnsemble& ensemble, double tol = measures::kEntanglementTol);
Verdict13 verdict_1to3(const CanonicalEnsemble& ensemble,
                       double tol = measures::kEntanglementTol);
/// Optimality only, with early exit; for scanners.
bool optimal_1to3(const CanonicalEnsemble& ensemble, double tol = measures::kEntanglementTol);

/// Result of comparing the Bloch-norm separability bound of the local
/// outputs with the partial-transpose verdict.
struct BoundCheck {
  double bound = 0.0;  // 1 - 4p^2q^2 (local) or (1 - 2pq)/(1 - pq)^2 (nonlocal)
  bool x_within = false;
  bool y_within = false;
  bool ph_separable_13 = false;
  bool ph_separable_24 = false;
  bool agrees = false;
};

double separability_bound(const cloners::Asym12& a, CloneMode mode);
BoundCheck separability_bound_check(const qcore::CanonicalTwoQubit& c,
                                    const cloners::Asym12& a, CloneMode mode,
                                    double tol = measures::kEntanglementTol);

struct DiscordAudit {
  double simulated_13 = 0.0;
  double simulated_24 = 0.0;
  double formula = 0.0;
  std::map<std::string, double> nonlocal;  // "14", "23", "12", "34"
  /// D_G(13) = 0 implies a zero-discord pair in each nonlocal group.
  bool implication_holds = false;
};

/// p^2 q^2 / (2 (1 - pq)^2) for local cloning, p^2 q^2 / (2 (2 - 3pq)^2) for
/// nonlocal cloning.
double discord_formula(const cloners::Asym12& a, CloneMode mode);
DiscordAudit discord_audit_1to2(const cloners::Asym12& a, CloneMode mode,
                                const qcore::CanonicalTwoQubit& sample);

}  // namespace qbroadcast::pipelines
