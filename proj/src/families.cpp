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

#include "qbroadcast/families.hpp"

#include <cmath>

#include "qbroadcast/errors.hpp"

namespace qbroadcast::families {
namespace {

using qcore::CanonicalTwoQubit;

constexpr double kRangeSlack = 1e-12;

void require_unit(double v, const char* name) {
  if (!(v >= -kRangeSlack && v <= 1.0 + kRangeSlack)) {
    throw ParameterError(std::string(name) + " = " + std::to_string(v) +
                         " outside [0, 1]");
  }
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void require_params(const FamilyPoint& point, std::size_t n) {
  if (point.params.size() != n) {
    throw ParameterError(family_name(point.family) + " expects " + std::to_string(n) +
                         " parameters, got " + std::to_string(point.params.size()));
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::kGeneralTwoQubit: return "general";
    case Family::kMemsI: return "mems-i";
    case Family::kMemsII: return "mems-ii";
    case Family::kNME: return "nme";
    case Family::kWernerLike: return "werner";
    case Family::kBellDiagonal: return "bds";
  }
  return "unknown";
}

FamilyPoint mems_point(double r) {
  require_unit(r, "r");
  FamilyPoint p;
  p.family = r > 2.0 / 3.0 ? Family::kMemsI : Family::kMemsII;
  p.params = {r};
  p.both_mems_subclasses = std::abs(r - 2.0 / 3.0) <= 1e-12;
  return p;
}

FamilyPoint nme_point(double k) {
  require_unit(k, "k");
  return FamilyPoint{Family::kNME, {k}, {}, false};
}

FamilyPoint werner_point(double p, double k) {
  require_unit(p, "p");
  require_unit(k, "k");
  return FamilyPoint{Family::kWernerLike, {p, k}, {}, false};
}

FamilyPoint bell_point(double c1, double c2, double c3) {
  return FamilyPoint{Family::kBellDiagonal, {c1, c2, c3}, {}, false};
}

CanonicalTwoQubit canonical(const FamilyPoint& point) {
  switch (point.family) {
    case Family::kGeneralTwoQubit:
      return point.general;
    case Family::kMemsI:
    case Family::kMemsII:
      require_params(point, 1);
      return mems_canonical(point.params[0]);
    case Family::kNME:
      require_params(point, 1);
      return nme_canonical(point.params[0]);
    case Family::kWernerLike:
      require_params(point, 2);
      return werner_canonical(point.params[0], point.params[1]);
    case Family::kBellDiagonal:
      require_params(point, 3);
      return bell_canonical(point.params[0], point.params[1], point.params[2]);
  }
  throw ParameterError("unknown family");
}

qcore::DensityOp make_state(const FamilyPoint& point) {
  switch (point.family) {
    case Family::kMemsI:
    case Family::kMemsII:
      require_params(point, 1);
      return mems(point.params[0]);
    case Family::kNME:
      require_params(point, 1);
      return nme(point.params[0]);
    case Family::kBellDiagonal:
      require_params(point, 3);
      return bell_diagonal(point.params[0], point.params[1], point.params[2]);
    default:
      return general_two_qubit(canonical(point));
  }
}

Eigen::Matrix4cd mems_i_matrix(double r) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = r / 2.0;
  m(1, 1) = 1.0 - r;
  m(3, 3) = r / 2.0;
  m(0, 3) = r / 2.0;
  m(3, 0) = r / 2.0;
  return m;
}

Eigen::Matrix4cd mems_ii_matrix(double r) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0 / 3.0;
  m(1, 1) = 1.0 / 3.0;
  m(3, 3) = 1.0 / 3.0;
  m(0, 3) = r / 2.0;
  m(3, 0) = r / 2.0;
  return m;
}

qcore::DensityOp mems(double r) {
  require_unit(r, "r");
  r = clamp01(r);
  return qcore::DensityOp(r > 2.0 / 3.0 ? mems_i_matrix(r) : mems_ii_matrix(r));
}

CanonicalTwoQubit mems_canonical(double r) {
  require_unit(r, "r");
  CanonicalTwoQubit c;
  if (r > 2.0 / 3.0) {
    c.x << 0, 0, 1 - r;
    c.y << 0, 0, r - 1;
    c.t.diagonal() << r, -r, 2 * r - 1;
  } else {
    c.x << 0, 0, 1.0 / 3.0;
    c.y << 0, 0, -1.0 / 3.0;
    c.t.diagonal() << r, -r, 1.0 / 3.0;
  }
  return c;
}

qcore::DensityOp nme(double k) {
  require_unit(k, "k");
  k = clamp01(k);
  qcore::CVector psi = qcore::CVector::Zero(4);
  psi(0) = std::sqrt(k);
  psi(3) = std::sqrt(1.0 - k);
  return qcore::DensityOp::pure(psi);
}

CanonicalTwoQubit nme_canonical(double k) { return werner_canonical(1.0, k); }

CanonicalTwoQubit werner_canonical(double p, double k) {
  require_unit(p, "p");
  require_unit(k, "k");
  p = clamp01(p);
  k = clamp01(k);
  const double s = 2.0 * p * std::sqrt(k * (1.0 - k));
  CanonicalTwoQubit c;
  c.x << 0, 0, p * (2 * k - 1);
  c.y = c.x;
  c.t.diagonal() << s, -s, p;
  return c;
}

qcore::DensityOp werner_like(double p, double k) {
  return general_two_qubit(werner_canonical(p, k));
}

std::array<double, 4> bell_weights(double c1, double c2, double c3) {
  std::array<double, 4> w{};
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      const double su = u ? -1.0 : 1.0;
      const double sv = v ? -1.0 : 1.0;
      w[2 * u + v] = 0.25 * (1.0 + su * c1 - su * sv * c2 + sv * c3);
    }
  }
  return w;
}

bool bell_diagonal_valid(double c1, double c2, double c3, double tol) {
  for (double w : bell_weights(c1, c2, c3)) {
    if (w < -tol) return false;
  }
  return true;
}

CanonicalTwoQubit bell_canonical(double c1, double c2, double c3) {
  const auto w = bell_weights(c1, c2, c3);
  std::vector<std::pair<int, int>> violated;
  std::string listing;
  for (int i = 0; i < 4; ++i) {
    if (w[i] < -1e-12) {
      violated.emplace_back(i / 2, i % 2);
      listing += " lambda_" + std::to_string(i / 2) + std::to_string(i % 2) + "=" +
                 std::to_string(w[i]);
    }
  }
  if (!violated.empty()) {
    throw InvalidBellDiagonalError("Bell-diagonal weights negative:" + listing,
                                   std::move(violated));
  }
  CanonicalTwoQubit c;
  c.t.diagonal() << c1, c2, c3;
  return c;
}

qcore::DensityOp bell_diagonal(double c1, double c2, double c3) {
  return general_two_qubit(bell_canonical(c1, c2, c3));
}

qcore::DensityOp general_two_qubit(const CanonicalTwoQubit& c) {
  return qcore::from_canonical(c);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw ParameterError("grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

std::vector<FamilyPoint> werner_grid(int n) {
  std::vector<FamilyPoint> out;
  const auto axis = linspace(0.0, 1.0, n);
  for (double p : axis) {
    for (double k : axis) out.push_back(werner_point(p, k));
  }
  return out;
}

std::vector<FamilyPoint> bds_tetrahedron_grid(int n) {
  std::vector<FamilyPoint> out;
  const auto axis = linspace(-1.0, 1.0, n);
  for (double c1 : axis) {
    for (double c2 : axis) {
      for (double c3 : axis) {
        if (bell_diagonal_valid(c1, c2, c3)) out.push_back(bell_point(c1, c2, c3));
      }
    }
  }
  return out;
}

}  // namespace qbroadcast::families
