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

#include "qbroadcast/pipelines.hpp"

#include <algorithm>
#include <cmath>

#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"

namespace qbroadcast::pipelines {
namespace {

using qcore::DensityOp;
using qcore::Isometry;

constexpr double kZeroDiscord = 1e-12;

// A state whose wire positions carry output-wire labels.
struct Labeled {
  DensityOp rho;
  std::vector<int> labels;
};

// Applies v to the wires labelled `inputs` (in order); v's outputs listed in
// `discard` are traced out and the kept outputs get `outputs` as labels.
Labeled apply_cloner(const Labeled& s, const Isometry& v, const std::vector<int>& inputs,
                     const std::vector<int>& outputs, const std::vector<int>& discard) {
  std::vector<int> front;
  for (int label : inputs) {
    const auto it = std::find(s.labels.begin(), s.labels.end(), label);
    if (it == s.labels.end()) throw WireError("no wire labelled " + std::to_string(label));
    front.push_back(static_cast<int>(it - s.labels.begin()) + 1);
  }
  const int n = s.rho.wire_count();
  const auto placement = qcore::WireMap::leading(n, front);
  Labeled out{qcore::apply_isometry_traced(s.rho, v, placement, discard), outputs};
  for (std::size_t i = front.size(); i < placement.perm.size(); ++i) {
    out.labels.push_back(s.labels[placement.perm[i] - 1]);
  }
  return out;
}

// All pairs of the labelled wires, each reduced state in ascending label order.
std::map<std::string, DensityOp> all_pairs(const Labeled& s) {
  std::vector<int> position(s.labels.size() + 1, 0);
  for (std::size_t i = 0; i < s.labels.size(); ++i) position[s.labels[i]] = static_cast<int>(i) + 1;
  std::map<std::string, DensityOp> out;
  const int n = static_cast<int>(s.labels.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.emplace(pair_label(i, j), qcore::partial_trace(s.rho, {position[i], position[j]}));
    }
  }
  return out;
}

void require_two_qubits(const DensityOp& rho) {
  if (rho.wire_count() != 2) {
    throw DimensionError("broadcasting needs a two-qubit resource, got " +
                         std::to_string(rho.wire_count()) + " wires");
  }
}

Labeled local_1to2(const DensityOp& rho12, const cloners::Asym12& a) {
  const Isometry v = cloners::local_cloner_isometry(a);
  Labeled s{rho12, {1, 2}};
  s = apply_cloner(s, v, {1}, {1, 3}, {3});
  return apply_cloner(s, v, {2}, {2, 4}, {3});
}

Labeled nonlocal_1to2(const DensityOp& rho12, const cloners::Asym12& a) {
  const Isometry v = cloners::nonlocal_cloner_isometry(a);
  return apply_cloner(Labeled{rho12, {1, 2}}, v, {1, 2}, {1, 2, 3, 4}, {5, 6});
}

bool all_match(const std::map<std::string, measures::PHReport>& m,
            const std::vector<std::string>& keys, bool want_entangled) {
  for (const auto& k : keys) {
    if (m.at(k).entangled != want_entangled) return false;
  }
  return true;
}

template <typename Ensemble, typename Report>
BroadcastVerdict verdict_impl(const Ensemble& pairs, Group group, Report report) {
  BroadcastVerdict v;
  v.group = group;
  const auto [n1, n2] = group_pairs(group);
  for (const std::string& label : {n1, n2, std::string("13"), std::string("24")}) {
    const auto it = pairs.find(label);
    if (it == pairs.end()) throw Error("ensemble lacks pair " + label);
    v.per_pair.emplace(label, report(it->second));
  }
  v.nonlocal_entangled = all_match(v.per_pair, {n1, n2}, true);
  v.locals_separable = all_match(v.per_pair, {"13", "24"}, false);
  v.optimal = v.nonlocal_entangled && v.locals_separable;
  return v;
}

template <typename Ensemble, typename Report>
Verdict13 verdict13_impl(const Ensemble& pairs, Report report) {
  Verdict13 v;
  auto fetch = [&](const std::string& label) {
    const auto it = pairs.find(label);
    if (it == pairs.end()) throw Error("ensemble lacks pair " + label);
    return v.per_pair.emplace(label, report(it->second)).first->second;
  };
  for (const auto& label : kNonlocalPairs13) {
    if (fetch(label).entangled) ++v.nonlocal_entangled_count;
  }
  v.nonlocal_entangled = v.nonlocal_entangled_count == 3;
  v.locals_separable = true;
  for (const auto& label : kLocalPairs13) {
    if (fetch(label).entangled) v.locals_separable = false;
  }
  v.optimal = v.nonlocal_entangled && v.locals_separable;
  return v;
}

}  // namespace

const DensityOp& OutputEnsemble::pair(const std::string& label) const {
  const auto it = pairs.find(label);
  if (it == pairs.end()) throw Error("ensemble '" + strategy + "' lacks pair " + label);
  return it->second;
}

CanonicalEnsemble OutputEnsemble::canonical() const {
  CanonicalEnsemble out;
  for (const auto& [label, rho] : pairs) out[label] = qcore::to_canonical(rho);
  return out;
}

OutputEnsemble broadcast_1to2_local(const DensityOp& rho12, const cloners::Asym12& a) {
  require_two_qubits(rho12);
  return OutputEnsemble{all_pairs(local_1to2(rho12, a)), "1to2-local", {{"p", a.p}}};
}

OutputEnsemble broadcast_1to2_nonlocal(const DensityOp& rho12, const cloners::Asym12& a) {
  require_two_qubits(rho12);
  return OutputEnsemble{all_pairs(nonlocal_1to2(rho12, a)), "1to2-nonlocal", {{"p", a.p}}};
}

OutputEnsemble broadcast_1to2(const DensityOp& rho12, const cloners::Asym12& a,
                              CloneMode mode) {
  return mode == CloneMode::kLocal ? broadcast_1to2_local(rho12, a)
                                   : broadcast_1to2_nonlocal(rho12, a);
}

OutputEnsemble successive_broadcast(const DensityOp& rho12, const cloners::SuccessiveParams& sp,
                                    CloneMode mode, Step2Choice step2) {
  require_two_qubits(rho12);
  const bool mirrored = step2 == Step2Choice::kMirrored;
  Labeled s{rho12, {}};
  if (mode == CloneMode::kLocal) {
    s = local_1to2(rho12, sp.first());
    const Isometry v = cloners::local_cloner_isometry(sp.second());
    const int a_wire = mirrored ? 1 : 3;
    s = apply_cloner(s, v, {a_wire}, {a_wire, 5}, {3});
    s = apply_cloner(s, v, {a_wire + 1}, {a_wire + 1, 6}, {3});
  } else {
    s = nonlocal_1to2(rho12, sp.first());
    const Isometry v = cloners::nonlocal_cloner_isometry(sp.second());
    const int w = mirrored ? 3 : 1;
    s = apply_cloner(s, v, {w, w + 1}, {w, w + 1, 5, 6}, {5, 6});
  }
  return OutputEnsemble{all_pairs(s),
                        "successive-" + mode_name(mode) + (mirrored ? "-mirrored" : ""),
                        {{"p1", sp.p1}, {"p2", sp.p2}}};
}

OutputEnsemble successive_broadcast(double k, const cloners::SuccessiveParams& sp,
                                    CloneMode mode, Step2Choice step2) {
  OutputEnsemble e = successive_broadcast(families::nme(k), sp, mode, step2);
  e.params.emplace_back("k", k);
  return e;
}

OutputEnsemble direct13_broadcast(const DensityOp& rho12, const cloners::Asym13& a,
                                  CloneMode mode) {
  require_two_qubits(rho12);
  const int want = mode == CloneMode::kLocal ? 2 : 4;
  if (a.d != want) {
    throw ParameterError("direct " + mode_name(mode) + " broadcasting needs d = " +
                         std::to_string(want));
  }
  const Isometry v = cloners::direct13_isometry(a);
  Labeled s{rho12, {1, 2}};
  if (mode == CloneMode::kLocal) {
    s = apply_cloner(s, v, {1}, {1, 3, 5}, {4, 5});
    s = apply_cloner(s, v, {2}, {2, 4, 6}, {4, 5});
  } else {
    s = apply_cloner(s, v, {1, 2}, {1, 2, 3, 4, 5, 6}, {7, 8, 9, 10});
  }
  return OutputEnsemble{all_pairs(s), "direct-" + mode_name(mode),
                        {{"alpha", a.alpha}, {"beta", a.beta}, {"gamma", a.gamma}}};
}

OutputEnsemble direct13_broadcast(double k, const cloners::Asym13& a, CloneMode mode) {
  OutputEnsemble e = direct13_broadcast(families::nme(k), a, mode);
  e.params.emplace_back("k", k);
  return e;
}

std::string group_name(Group g) { return g == Group::kDiagonal ? "diagonal" : "horizontal"; }

std::pair<std::string, std::string> group_pairs(Group g) {
  return g == Group::kDiagonal ? std::pair<std::string, std::string>{"14", "23"}
                               : std::pair<std::string, std::string>{"12", "34"};
}

BroadcastVerdict verdict(const OutputEnsemble& ensemble, Group group, double tol) {
  return verdict_impl(ensemble.pairs, group,
                      [tol](const DensityOp& r) { return measures::ph_report(r, tol); });
}

BroadcastVerdict verdict(const CanonicalEnsemble& ensemble, Group group, double tol) {
  return verdict_impl(ensemble, group, [tol](const qcore::CanonicalTwoQubit& c) {
    return measures::ph_report(c, tol);
  });
}

Verdict13 verdict_1to3(const OutputEnsemble& ensemble, double tol) {
  return verdict13_impl(ensemble.pairs,
                        [tol](const DensityOp& r) { return measures::ph_report(r, tol); });
}

Verdict13 verdict_1to3(const CanonicalEnsemble& ensemble, double tol) {
  return verdict13_impl(ensemble, [tol](const qcore::CanonicalTwoQubit& c) {
    return measures::ph_report(c, tol);
  });
}

bool optimal_1to3(const CanonicalEnsemble& ensemble, double tol) {
  for (const auto& label : kNonlocalPairs13) {
    if (!measures::is_entangled(ensemble.at(label), tol)) return false;
  }
  for (const auto& label : kLocalPairs13) {
    if (measures::is_entangled(ensemble.at(label), tol)) return false;
  }
  return true;
}

double separability_bound(const cloners::Asym12& a, CloneMode mode) {
  const double pq = a.p * a.q;
  if (mode == CloneMode::kLocal) return 1.0 - 4.0 * pq * pq;
  return (1.0 - 2.0 * pq) / ((1.0 - pq) * (1.0 - pq));
}

BoundCheck separability_bound_check(const qcore::CanonicalTwoQubit& c, const cloners::Asym12& a,
                                    CloneMode mode, double tol) {
  BoundCheck b;
  b.bound = separability_bound(a, mode);
  b.x_within = c.x.squaredNorm() <= b.bound + 1e-12;
  b.y_within = c.y.squaredNorm() <= b.bound + 1e-12;
  const CanonicalEnsemble e = closed_form_1to2(c, a, mode);
  b.ph_separable_13 = !measures::is_entangled(e.at("13"), tol);
  b.ph_separable_24 = !measures::is_entangled(e.at("24"), tol);
  b.agrees = b.x_within == b.ph_separable_13 && b.y_within == b.ph_separable_24;
  return b;
}

double discord_formula(const cloners::Asym12& a, CloneMode mode) {
  const double pq = a.p * a.q;
  const double den = mode == CloneMode::kLocal ? 1.0 - pq : 2.0 - 3.0 * pq;
  return pq * pq / (2.0 * den * den);
}

DiscordAudit discord_audit_1to2(const cloners::Asym12& a, CloneMode mode,
                                const qcore::CanonicalTwoQubit& sample) {
  const OutputEnsemble e = broadcast_1to2(qcore::from_canonical(sample), a, mode);
  DiscordAudit d;
  d.simulated_13 = measures::geometric_discord(e.pair("13")).d_g;
  d.simulated_24 = measures::geometric_discord(e.pair("24")).d_g;
  d.formula = discord_formula(a, mode);
  for (const char* label : {"14", "23", "12", "34"}) {
    d.nonlocal[label] = measures::geometric_discord(e.pair(label)).d_g;
  }
  const bool zero13 = d.simulated_13 <= kZeroDiscord;
  const bool diagonal_zero =
      std::min(d.nonlocal["14"], d.nonlocal["23"]) <= kZeroDiscord;
  const bool horizontal_zero =
      std::min(d.nonlocal["12"], d.nonlocal["34"]) <= kZeroDiscord;
  d.implication_holds = !zero13 || (diagonal_zero && horizontal_zero);
  return d;
}

}  // namespace qbroadcast::pipelines
