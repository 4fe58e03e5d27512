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

#include "qbroadcast/unisearch.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>

#include "qbroadcast/closed_forms.hpp"
#include "qbroadcast/errors.hpp"
#include "qbroadcast/families.hpp"
#include "qbroadcast/parallel.hpp"

namespace qbroadcast::unisearch {
namespace {

using Eigen::Matrix4cd;
using qcore::CanonicalTwoQubit;

constexpr double kPi = std::numbers::pi;

// Pair states per grid point, precomputed once per search.
std::vector<Matrix4cd> grid_matrices(const std::vector<CanonicalTwoQubit>& grid) {
  std::vector<Matrix4cd> out;
  out.reserve(grid.size());
  for (const auto& c : grid) out.push_back(qcore::canonical_matrix(c));
  return out;
}

double min_pt(const Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(measures::partial_transpose(rho),
                                                  Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

// A two-qubit partial transpose has at most one negative eigenvalue, so a
// clearly positive determinant rules entanglement out without diagonalizing.
constexpr double kDetSeparableFloor = 1e-13;

bool entangled_pt(const Matrix4cd& pt, double tol) {
  if (pt.determinant().real() > kDetSeparableFloor) return false;
  Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(pt, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0) < -tol;
}

bool entangled(const Matrix4cd& rho, double tol) {
  return entangled_pt(measures::partial_transpose(rho), tol);
}

struct PointFlags {
  bool diagonal = false;
  bool locals = false;  // 13 or 24 entangled
};

PointFlags unitary_point(const UnitaryChannel& ch, const Matrix4cd& rho, double tol) {
  const auto out = ch.apply(rho);
  PointFlags f;
  f.diagonal = entangled(out[0], tol) && entangled(out[1], tol);
  if (f.diagonal) f.locals = entangled(out[2], tol) || entangled(out[3], tol);
  return f;
}

PointFlags cloner_point(const CanonicalTwoQubit& c, double tol) {
  const auto e = pipelines::closed_form_1to2(c, cloners::Asym12::from_p(0.5),
                                             pipelines::CloneMode::kLocal);
  PointFlags f;
  f.diagonal = measures::is_entangled(e.at("14"), tol) && measures::is_entangled(e.at("23"), tol);
  if (f.diagonal) {
    f.locals = measures::is_entangled(e.at("13"), tol) || measures::is_entangled(e.at("24"), tol);
  }
  return f;
}

template <typename PointFn>
RangeStats tally(std::size_t n, PointFn point) {
  RangeStats s;
  s.points = n;
  s.mask.assign(n, 0);
  std::vector<char> locals(n, 0);
  parallel_for(n, [&](std::size_t i) {
    const PointFlags f = point(i);
    s.mask[i] = f.diagonal ? 1 : 0;
    locals[i] = f.locals ? 1 : 0;
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.mask[i]) continue;
    ++s.broadcastable;
    if (locals[i]) {
      ++s.locals_entangled;
    } else {
      ++s.optimal;
    }
  }
  s.fraction = n == 0 ? 0.0 : static_cast<double>(s.broadcastable) / static_cast<double>(n);
  return s;
}

using Vec16 = Eigen::Matrix<std::complex<double>, 16, 1>;
using Transfer = Eigen::Matrix<std::complex<double>, 16, 16>;

// Linear maps rho12 -> partial transpose of the (1,4) and (2,3) outputs,
// acting on column-major vectorized matrices.
std::array<Transfer, 2> diagonal_transfers(const UnitaryChannel& ch) {
  std::array<Transfer, 2> t;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      Matrix4cd e = Matrix4cd::Zero();
      e(i, j) = 1.0;
      const auto out = ch.apply(e);
      for (int p = 0; p < 2; ++p) {
        const Matrix4cd pt = measures::partial_transpose(out[p]);
        t[p].col(i + 4 * j) = Eigen::Map<const Vec16>(pt.data());
      }
    }
  }
  return t;
}

std::size_t count_broadcastable(const Eigen::Matrix4d& u, const std::vector<Matrix4cd>& grid,
                                double tol) {
  const auto t = diagonal_transfers(UnitaryChannel(u.cast<std::complex<double>>()));
  std::atomic<std::size_t> count{0};
  parallel_for(grid.size(), [&](std::size_t i) {
    const Eigen::Map<const Vec16> rho(grid[i].data());
    Matrix4cd pt;
    Eigen::Map<Vec16>(pt.data()) = t[0] * rho;
    if (!entangled_pt(pt, tol)) return;
    Eigen::Map<Vec16>(pt.data()) = t[1] * rho;
    if (entangled_pt(pt, tol)) ++count;
  });
  return count.load();
}

}  // namespace

U4Params::U4Params(const std::array<double, 12>& values) : v_(values) {
  const double err = max_constraint_error();
  if (err > 1e-12) {
    throw ParameterError("unitary parameter pair off the unit circle by " + std::to_string(err));
  }
}

U4Params U4Params::from_angles(const std::array<double, 6>& theta) {
  std::array<double, 12> v{};
  for (int i = 0; i < 6; ++i) {
    v[2 * i] = std::cos(theta[i]);
    v[2 * i + 1] = std::sin(theta[i]);
  }
  return U4Params(v);
}

std::array<double, 6> U4Params::angles() const {
  std::array<double, 6> t{};
  for (int i = 0; i < 6; ++i) t[i] = std::atan2(v_[2 * i + 1], v_[2 * i]);
  return t;
}

double U4Params::max_constraint_error() const {
  double err = 0.0;
  for (int i = 0; i < 6; ++i) {
    err = std::max(err, std::abs(v_[2 * i] * v_[2 * i] + v_[2 * i + 1] * v_[2 * i + 1] - 1.0));
  }
  return err;
}

Eigen::Matrix4d u4_from_params(const U4Params& params) {
  const auto& v = params.values();
  const double a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
  const double g = v[6], h = v[7], j = v[8], l = v[9], m = v[10], n = v[11];
  Eigen::Matrix4d u;
  u << a, b * c, b * d * e, b * d * f,
      b * g, -a * c * g + d * h * m, -a * d * e * g - c * e * h * m + f * h * n,
      -a * d * f * g - c * f * h * m - e * h * n,
      b * h * j, -a * c * h * j - d * g * j * m + d * l * n,
      -a * d * e * h * j + c * e * g * j * m - c * e * l * n - f * g * j * n - f * l * m,
      -a * d * f * h * j + c * f * g * j * m - c * f * l * n + e * g * j * n + e * l * m,
      b * h * l, -a * c * h * l - d * g * l * m - d * j * n,
      -a * d * e * h * l + c * e * g * l * m + c * e * j * n - f * g * l * n + f * j * m,
      -a * d * f * h * l + c * f * g * l * m + c * f * j * n + e * g * l * n - e * j * m;
  const double err = (u.transpose() * u - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    throw NumericalError("parameterized matrix not unitary (deviation " + std::to_string(err) +
                         ")");
  }
  return u;
}

ReferenceUnitaries reference_unitaries() {
  auto cosines = [](const std::array<double, 12>& multiples_of_tenth_pi) {
    std::array<double, 12> v{};
    for (int i = 0; i < 12; ++i) v[i] = std::cos(multiples_of_tenth_pi[i] * kPi / 10.0);
    return U4Params(v);
  };
  return ReferenceUnitaries{
      cosines({0, 5, 2, 3, 4, 1, 4, 1, 0, 5, 4, 9}),
      cosines({2, 7, 6, 9, 8, 3, 4, 9, 0, 5, 10, 5}),
  };
}

pipelines::OutputEnsemble broadcast_via_unitary(const qcore::DensityOp& rho12,
                                                const Eigen::Matrix4cd& u) {
  if (rho12.wire_count() != 2) throw DimensionError("unitary broadcasting needs two qubits");
  const qcore::Isometry v{qcore::CMatrix(u)};
  if (v.out_dim() != 4) throw DimensionError("broadcasting unitary must be 4 x 4");
  const std::array<int, 2> blank{0, 0};
  qcore::DensityOp s = qcore::tensor(rho12, qcore::DensityOp::basis(blank));
  // Wires (1,2,3,4) -> u on (1,3) gives order (1,3,2,4) -> u on (2,4) gives (2,4,1,3).
  s = qcore::apply_isometry(s, v, qcore::WireMap::leading(4, {1, 3}));
  s = qcore::apply_isometry(s, v, qcore::WireMap::leading(4, {3, 4}));
  pipelines::OutputEnsemble e;
  e.strategy = "unitary";
  e.pairs.emplace("14", qcore::partial_trace(s, {3, 2}));
  e.pairs.emplace("23", qcore::partial_trace(s, {1, 4}));
  e.pairs.emplace("13", qcore::partial_trace(s, {3, 4}));
  e.pairs.emplace("24", qcore::partial_trace(s, {1, 2}));
  return e;
}

UnitaryChannel::UnitaryChannel(const Eigen::Matrix4cd& u) {
  // Isometry from rho12 into the four output wires: A[(w1 w2 w3 w4), (a b)].
  auto amp = [&u](int w1, int w2, int w3, int w4, int a, int b) {
    return u(2 * w1 + w3, 2 * a) * u(2 * w2 + w4, 2 * b);
  };
  // Pairs (1,4), (2,3), (1,3), (2,4) as wire indices 0..3.
  const std::array<std::array<int, 2>, 4> pairs = {{{0, 3}, {1, 2}, {0, 2}, {1, 3}}};
  for (int pi = 0; pi < 4; ++pi) {
    const int ka = pairs[pi][0], kb = pairs[pi][1];
    std::array<int, 2> traced{};
    int t = 0;
    for (int w = 0; w < 4; ++w) {
      if (w != ka && w != kb) traced[t++] = w;
    }
    for (int m = 0; m < 4; ++m) {
      Matrix4cd k = Matrix4cd::Zero();
      for (int out = 0; out < 4; ++out) {
        std::array<int, 4> w{};
        w[ka] = out >> 1;
        w[kb] = out & 1;
        w[traced[0]] = m >> 1;
        w[traced[1]] = m & 1;
        for (int in = 0; in < 4; ++in) k(out, in) = amp(w[0], w[1], w[2], w[3], in >> 1, in & 1);
      }
      kraus_[pi][m] = k;
    }
  }
}

std::array<Matrix4cd, 4> UnitaryChannel::apply(const Matrix4cd& rho12) const {
  std::array<Matrix4cd, 4> out;
  for (int pi = 0; pi < 4; ++pi) {
    out[pi].setZero();
    for (const auto& k : kraus_[pi]) out[pi].noalias() += k * rho12 * k.adjoint();
  }
  return out;
}

RangeStats range_fraction(const Eigen::Matrix4cd& u, const std::vector<CanonicalTwoQubit>& grid,
                          double tol) {
  const UnitaryChannel ch(u);
  return tally(grid.size(), [&](std::size_t i) {
    return unitary_point(ch, qcore::canonical_matrix(grid[i]), tol);
  });
}

RangeStats cloner_baseline(const std::vector<CanonicalTwoQubit>& grid, double tol) {
  return tally(grid.size(), [&](std::size_t i) { return cloner_point(grid[i], tol); });
}

std::string search_family_name(SearchFamily f) {
  return f == SearchFamily::kWernerLike ? "werner" : "bds";
}

std::vector<CanonicalTwoQubit> family_grid(SearchFamily f, int n) {
  const auto points = f == SearchFamily::kWernerLike ? families::werner_grid(n)
                                                      : families::bds_tetrahedron_grid(n);
  std::vector<CanonicalTwoQubit> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(families::canonical(p));
  return out;
}

SearchResult random_search(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw ParameterError("search needs at least one restart");
  if (cfg.refine_steps < 0) throw ParameterError("refine_steps must be non-negative");
  const auto grid = family_grid(cfg.family, cfg.grid_n);
  if (grid.empty()) throw ParameterError("search grid is empty");
  const auto mats = grid_matrices(grid);
  const double total = static_cast<double>(grid.size());
  auto score = [&](const std::array<double, 6>& theta) {
    return count_broadcastable(u4_from_params(U4Params::from_angles(theta)), mats, cfg.tol);
  };

  SearchResult result;
  result.baseline_fraction = cloner_baseline(grid, cfg.tol).fraction;
  std::size_t best_count = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::array<double, 6> theta{};
    for (double& t : theta) t = angle(rng);
    std::size_t current = score(theta);

    // Stage 1: the pi/10 lattice; stage 2: +-1..10 steps of pi/100.
    for (int stage = 0; stage < 2; ++stage) {
      for (int sweep = 0; sweep < cfg.refine_steps; ++sweep) {
        bool improved = false;
        for (int i = 0; i < 6; ++i) {
          const double centre = theta[i];
          std::vector<double> candidates;
          if (stage == 0) {
            for (int k = 0; k < 20; ++k) candidates.push_back(k * kPi / 10.0);
          } else {
            for (int s = -10; s <= 10; ++s) {
              if (s != 0) candidates.push_back(centre + s * kPi / 100.0);
            }
          }
          for (double cand : candidates) {
            std::array<double, 6> trial = theta;
            trial[i] = cand;
            const std::size_t sc = score(trial);
            if (sc > current) {
              current = sc;
              theta = trial;
              improved = true;
            }
          }
        }
        if (!improved) break;
      }
    }
    const double fraction = static_cast<double>(current) / total;
    result.history.push_back(fraction);
    if (r == 0 || current > best_count) {
      best_count = current;
      result.best_fraction = fraction;
      result.best_params = U4Params::from_angles(theta);
      result.best_restart = r;
    }
  }
  return result;
}

pipelines::ScanTable scan_unitary_family(const Eigen::Matrix4cd& u, SearchFamily f, int n,
                                         double tol) {
  const auto points = f == SearchFamily::kWernerLike ? families::werner_grid(n)
                                                      : families::bds_tetrahedron_grid(n);
  pipelines::ScanTable t;
  t.columns = f == SearchFamily::kWernerLike ? std::vector<std::string>{"p", "k"}
                                              : std::vector<std::string>{"c1", "c2", "c3"};
  for (const char* col :
       {"unitary_broadcastable", "unitary_locals_entangled", "cloner_broadcastable",
        "cloner_optimal", "unitary_minpt_14", "unitary_minpt_23", "unitary_minpt_13",
        "unitary_minpt_24", "cloner_minpt_14", "cloner_minpt_23"}) {
    t.columns.emplace_back(col);
  }
  const UnitaryChannel ch(u);
  t.rows.resize(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const auto c = families::canonical(points[i]);
    const auto out = ch.apply(qcore::canonical_matrix(c));
    std::array<double, 4> mp{};
    for (int k = 0; k < 4; ++k) mp[k] = min_pt(out[k]);
    const auto e = pipelines::closed_form_1to2(c, cloners::Asym12::from_p(0.5),
                                               pipelines::CloneMode::kLocal);
    const double c14 = measures::min_pt_eigenvalue(e.at("14"));
    const double c23 = measures::min_pt_eigenvalue(e.at("23"));
    const double c13 = measures::min_pt_eigenvalue(e.at("13"));
    const double c24 = measures::min_pt_eigenvalue(e.at("24"));
    const bool ub = mp[0] < -tol && mp[1] < -tol;
    const bool cb = c14 < -tol && c23 < -tol;
    std::vector<double> row(points[i].params.begin(), points[i].params.end());
    row.insert(row.end(),
               {ub ? 1.0 : 0.0, ub && (mp[2] < -tol || mp[3] < -tol) ? 1.0 : 0.0,
                cb ? 1.0 : 0.0, cb && c13 >= -tol && c24 >= -tol ? 1.0 : 0.0, mp[0], mp[1],
                mp[2], mp[3], c14, c23});
    t.rows[i] = std::move(row);
  });
  return t;
}

}  // namespace qbroadcast::unisearch
