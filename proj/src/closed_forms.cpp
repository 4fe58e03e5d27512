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

#include "qbroadcast/closed_forms.hpp"

#include <array>
#include <cmath>

namespace qbroadcast::pipelines {
namespace {

using qcore::CanonicalTwoQubit;
using Eigen::Matrix3d;
using Eigen::Vector3d;

CanonicalTwoQubit triple(const Vector3d& x, const Vector3d& y, const Matrix3d& t) {
  return CanonicalTwoQubit{x, y, t};
}

Vector3d z_axis(double v) { return Vector3d(0.0, 0.0, v); }

Matrix3d nme_correlations(double k) {
  const double s = 2.0 * std::sqrt(std::max(0.0, k * (1.0 - k)));
  return Vector3d(s, -s, 1.0).asDiagonal();
}

int side(int wire) { return (wire - 1) % 2; }
int slot(int wire) { return (wire - 1) / 2; }  // 0, 1, 2 for wire pairs (1,2), (3,4), (5,6)

// Three slots with per-slot Bloch shrinking s, same-side coefficients l and
// cross-side coefficients x (both indexed by the unordered slot pair), and
// same-slot nonlocal coefficient h. The resource is NME(k).
struct SixWireForm {
  std::array<double, 3> s{};
  std::array<double, 3> h{};
  // Indexed by the missing slot: [0] = (1,2), [1] = (0,2), [2] = (0,1).
  std::array<double, 3> local{};
  std::array<double, 3> cross{};
};

CanonicalEnsemble expand(const SixWireForm& f, double k) {
  const double K = 2.0 * k - 1.0;
  const Matrix3d tn = nme_correlations(k);
  CanonicalEnsemble out;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      const int a = slot(i);
      const int b = slot(j);
      const Vector3d x = z_axis(f.s[a] * K);
      const Vector3d y = z_axis(f.s[b] * K);
      if (a == b) {
        out[pair_label(i, j)] = triple(x, y, f.h[a] * tn);
      } else if (side(i) == side(j)) {
        out[pair_label(i, j)] = triple(x, y, f.local[3 - a - b] * Matrix3d::Identity());
      } else {
        out[pair_label(i, j)] = triple(x, y, f.cross[3 - a - b] * tn);
      }
    }
  }
  return out;
}

}  // namespace

std::string mode_name(CloneMode m) { return m == CloneMode::kLocal ? "local" : "nonlocal"; }

std::string pair_label(int i, int j) {
  if (i > j) std::swap(i, j);
  return std::to_string(i) + std::to_string(j);
}

ClosedForm13Coeffs ClosedForm13Coeffs::compute(double a, double b, double g, double k) {
  const double K = 2.0 * k - 1.0;
  ClosedForm13Coeffs c;
  c.A1 = (3 * a * a + 3 * a * b + 3 * a * g + b * g) / 3;
  c.A2 = (3 * a * b + a * g + 3 * b * b + 3 * b * g) / 3;
  c.A3 = (a * b + 3 * a * g + 3 * b * g + 3 * g * g) / 3;
  c.B = (a * a + a * b + a * g + b * b + b * g + g * g) * K;
  c.D_AB = (3 * a * b + a * g + b * g + g * g) / 3;
  c.D_BC = (a * a + a * b + a * g + 3 * b * g) / 3;
  c.D_AC = (a * b + 3 * a * g + b * b + b * g) / 3;
  c.b1 = (10 * a * a + 5 * a * b + 5 * a * g + b * g) / 10;
  c.b2 = (5 * a * b + a * g + 10 * b * b + 5 * b * g) / 10;
  c.b3 = (a * b + 5 * a * g + 5 * b * g + 10 * g * g) / 10;
  c.B1 = c.b1 * K;
  c.B2 = c.b2 * K;
  c.B3 = c.b3 * K;
  c.C1 = (2 * a * a + a * b + a * g + 5 * b * g) / 10;
  c.C2 = (a * b + 5 * a * g + 2 * b * b + b * g) / 10;
  c.C3 = (5 * a * b + a * g + b * g + 2 * g * g) / 10;
  c.E_AB = (5 * a * b + a * g + b * g) / 10;
  c.E_BC = (5 * b * g + a * b + a * g) / 10;
  c.E_AC = (5 * a * g + a * b + b * g) / 10;
  return c;
}

CanonicalEnsemble closed_form_1to2(const CanonicalTwoQubit& c, const cloners::Asym12& a,
                                   CloneMode mode) {
  const Matrix3d id = Matrix3d::Identity();
  const Matrix3d& t = c.t;
  CanonicalEnsemble out;
  if (mode == CloneMode::kLocal) {
    const double p = a.p, q = a.q, mu = a.mu();
    out["13"] = triple(p * mu * c.x, q * mu * c.x, p * q * mu * id);
    out["24"] = triple(p * mu * c.y, q * mu * c.y, p * q * mu * id);
    out["14"] = triple(p * mu * c.x, q * mu * c.y, p * q * mu * mu * t);
    out["23"] = triple(p * mu * c.y, q * mu * c.x, p * q * mu * mu * t.transpose());
    out["12"] = triple(p * mu * c.x, p * mu * c.y, p * p * mu * mu * t);
    out["34"] = triple(q * mu * c.x, q * mu * c.y, q * q * mu * mu * t);
  } else {
    const double k1 = a.kappa1(), k2 = a.kappa2();
    const double f = a.p * a.q / (2.0 - 3.0 * a.p * a.q);
    out["13"] = triple(k1 * c.x, k2 * c.x, f * id);
    out["24"] = triple(k1 * c.y, k2 * c.y, f * id);
    out["14"] = triple(k1 * c.x, k2 * c.y, f * t);
    out["23"] = triple(k1 * c.y, k2 * c.x, f * t.transpose());
    out["12"] = triple(k1 * c.x, k1 * c.y, k1 * t);
    out["34"] = triple(k2 * c.x, k2 * c.y, k2 * t);
  }
  return out;
}

CanonicalEnsemble closed_form_successive(double k, const cloners::SuccessiveParams& sp,
                                         CloneMode mode, Step2Choice step2) {
  SixWireForm f;
  const bool mirrored = step2 == Step2Choice::kMirrored;
  if (mode == CloneMode::kLocal) {
    const double P1 = sp.P(1), Q1 = sp.Q(1), P2 = sp.P(2), Q2 = sp.Q(2);
    const double c1 = sp.p1 * sp.q1 / (1.0 - sp.p1 * sp.q1);
    const double c2 = sp.p2 * sp.q2 / (1.0 - sp.p2 * sp.q2);
    // Slot 0 keeps wires (1,2), slot 1 (3,4), slot 2 the new wires (5,6).
    if (!mirrored) {
      f.s = {P1, Q1 * P2, Q1 * Q2};
      f.local = {c2, c1 * Q2, c1 * P2};
    } else {
      f.s = {P1 * P2, Q1, P1 * Q2};
      f.local = {c1 * Q2, c2, c1 * P2};
    }
    for (int i = 0; i < 3; ++i) f.h[i] = f.s[i] * f.s[i];
    f.cross = {f.s[1] * f.s[2], f.s[0] * f.s[2], f.s[0] * f.s[1]};
  } else {
    const double t1 = sp.tau(1), t2 = sp.tau(2), z1 = sp.zeta(1), z2 = sp.zeta(2);
    const double f1 = sp.p1 * sp.q1 / sp.eta(1);
    const double f2 = sp.p2 * sp.q2 / sp.eta(2);
    if (!mirrored) {
      f.s = {t1 * t2, z1, t1 * z2};
      f.local = {f1 * z2, f2, f1 * t2};
      f.cross = {f1 * z2, f2 * t1, f1 * t2};
    } else {
      f.s = {t1, z1 * t2, z1 * z2};
      f.local = {f2, f1 * z2, f1 * t2};
      f.cross = {f2 * z1, f1 * z2, f1 * t2};
    }
    f.h = f.s;
  }
  return expand(f, k);
}

CanonicalEnsemble closed_form_direct13(double k, double alpha, double beta, double gamma,
                                       CloneMode mode) {
  const ClosedForm13Coeffs c = ClosedForm13Coeffs::compute(alpha, beta, gamma, k);
  SixWireForm f;
  if (mode == CloneMode::kLocal) {
    const double K = 2.0 * k - 1.0;
    // B equals K on the constraint surface; keep the Bloch factor as A_i B / K
    // only when K is nonzero.
    const double ratio = std::abs(K) > 0.0 ? c.B / K : 1.0;
    f.s = {c.A1 * ratio, c.A2 * ratio, c.A3 * ratio};
    f.h = {c.A1 * c.A1, c.A2 * c.A2, c.A3 * c.A3};
    f.local = {c.D_BC, c.D_AC, c.D_AB};
    f.cross = {c.A2 * c.A3, c.A1 * c.A3, c.A1 * c.A2};
  } else {
    f.s = {c.b1, c.b2, c.b3};
    f.h = f.s;
    f.local = {c.C1, c.C2, c.C3};
    f.cross = {c.E_BC, c.E_AC, c.E_AB};
  }
  return expand(f, k);
}

}  // namespace qbroadcast::pipelines
