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

// Closed-form canonical triples of the broadcasting outputs. These are the
// fast path used by the scanners and the oracle that the brute-force
// simulation is tested against.

#pragma once

#include <map>
#include <string>

#include "qbroadcast/cloners.hpp"
#include "qbroadcast/qcore.hpp"

namespace qbroadcast::pipelines {

enum class CloneMode { kLocal, kNonlocal };

/// Which first-step output pair the second cloner acts on in successive
/// broadcasting. kDefault: wires (3, 4) in local mode, register (1, 2) in
/// nonlocal mode. kMirrored swaps the two choices.
enum class Step2Choice { kDefault, kMirrored };

std::string mode_name(CloneMode m);

/// "ij" with i < j.
std::string pair_label(int i, int j);

/// Canonical triples keyed by pair label; x belongs to the lower wire.
using CanonicalEnsemble = std::map<std::string, qcore::CanonicalTwoQubit>;

/// Coefficients of the direct 1->3 outputs. A*, B and D* describe the local
/// (qubit, d = 2) cloner, B1..B3, C* and E* the nonlocal (d = 4) cloner.
/// B and B1..B3 include the factor K = 2k - 1; b1..b3 are the same
/// shrinking factors without it.
struct ClosedForm13Coeffs {
  double A1 = 0, A2 = 0, A3 = 0, B = 0;
  double D_AB = 0, D_BC = 0, D_AC = 0;
  double B1 = 0, B2 = 0, B3 = 0;
  double b1 = 0, b2 = 0, b3 = 0;
  double C1 = 0, C2 = 0, C3 = 0;
  double E_AB = 0, E_BC = 0, E_AC = 0;

  static ClosedForm13Coeffs compute(double alpha, double beta, double gamma, double k);
};

/// All six pairs {12, 13, 14, 23, 24, 34} of 1->2 broadcasting.
CanonicalEnsemble closed_form_1to2(const qcore::CanonicalTwoQubit& c,
                                   const cloners::Asym12& a, CloneMode mode);

/// All fifteen pairs of successive 1->3 broadcasting of NME(k).
CanonicalEnsemble closed_form_successive(double k, const cloners::SuccessiveParams& sp,
                                         CloneMode mode,
                                         Step2Choice step2 = Step2Choice::kDefault);

/// All fifteen pairs of direct 1->3 broadcasting of NME(k); the local mode
/// uses the qubit cloner on each side, the nonlocal mode the d = 4 cloner.
CanonicalEnsemble closed_form_direct13(double k, double alpha, double beta, double gamma,
                                       CloneMode mode);

}  // namespace qbroadcast::pipelines
