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

// Grid scans and boundary location for the broadcasting ranges.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qbroadcast/closed_forms.hpp"
#include "qbroadcast/measures.hpp"
#include "qbroadcast/pipelines.hpp"

namespace qbroadcast::pipelines {

/// Rows of doubles under named columns; booleans are stored as 0 / 1.
struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const;
};

struct ScanOptions {
  double tol = measures::kEntanglementTol;
  /// Simulate every point with cloner isometries instead of closed forms.
  bool force_brute_force = false;
  int bisection_iterations = 50;
};

// ---- 1 -> 2 broadcasting of MEMS ----

bool mems_optimal(double r, double p, CloneMode mode, Group group,
                  const ScanOptions& opt = {});

/// Smallest r on an n_r grid over [0, 1] with optimal broadcasting, refined
/// by bisection against the preceding grid point. Empty when no r works.
std::optional<double> mems_threshold(double p, CloneMode mode, Group group, int n_r = 401,
                                     const ScanOptions& opt = {});

/// Bisection for the verdict flip of `pred` between lo (false) and hi (true).
double bisect_flip(const std::function<bool(double)>& pred, double lo, double hi,
                   int iterations);

/// One row per (r, p): both verdicts of both cloners and min PT eigenvalues.
ScanTable scan_fig2(int n_r, int n_p, const ScanOptions& opt = {});

// ---- 1 -> 3 broadcasting of NME(k) ----

/// Range of k (within [0, 1]) for which broadcasting is optimal. The scan
/// checks k = 1/2 and an n_k grid; both ends are refined by bisection.
struct KRange {
  bool feasible = false;
  double k_lo = 0.0;
  double k_hi = 0.0;
  /// Whether the optimal grid points formed one contiguous run.
  bool contiguous = true;

  /// Half-width about k = 1/2: min(1/2 - k_lo, k_hi - 1/2), 0 if infeasible.
  double sigma() const;
};

KRange k_range(const std::function<bool(double)>& optimal_at, int n_k, int iterations);

bool successive_optimal(double k, const cloners::SuccessiveParams& sp, CloneMode mode,
                        Step2Choice step2, const ScanOptions& opt = {});
KRange successive_k_range(const cloners::SuccessiveParams& sp, CloneMode mode,
                          Step2Choice step2, int n_k, const ScanOptions& opt = {});

bool direct_optimal(double k, double alpha, double beta, double gamma, CloneMode mode,
                    const ScanOptions& opt = {});
KRange direct_k_range(double alpha, double beta, double gamma, CloneMode mode, int n_k,
                      const ScanOptions& opt = {});

/// Non-negative alpha completing (beta, gamma) for dimension d, if any.
std::optional<double> solve_alpha(double beta, double gamma, int d);

/// One row per (p1, p2) on an n_p x n_p grid over [0, 1].
ScanTable scan_fig4(int n_p, int n_k, const ScanOptions& opt = {},
                    Step2Choice step2 = Step2Choice::kDefault);
/// One row per (beta, gamma) on an n x n grid over [0, 1] (d = 4).
ScanTable scan_fig6(int n, int n_k, const ScanOptions& opt = {});

/// Summary of a (p1, p2) or (beta, gamma) region scan.
struct RegionSummary {
  int feasible_points = 0;
  double k_min = 1.0;  // union of the k ranges
  double k_max = 0.0;
  double best_sigma = 0.0;
  double best_u = 0.0;  // p1 or beta of the best point
  double best_v = 0.0;  // p2 or gamma of the best point
  double u_min = 1.0, u_max = 0.0, v_min = 1.0, v_max = 0.0;
};

/// Reads a fig4 / fig6 table; u, v name the two parameter columns.
RegionSummary summarize_region(const ScanTable& table, const std::string& u,
                               const std::string& v);

// ---- impossibility sweeps ----

struct SweepCount {
  long points = 0;
  long hits = 0;
};

/// Points of an n_p x n_p x n_k (p1, p2, k) grid where local successive
/// broadcasting makes all three nonlocal pairs entangled.
SweepCount successive_local_sweep(int n_p, int n_k, const ScanOptions& opt = {});
/// Points of an (alpha, beta, k) grid (gamma from the constraint, d = 2) where
/// local direct broadcasting is optimal.
SweepCount direct_local_sweep(int n_ab, int n_k, const ScanOptions& opt = {});
/// Points of an n_r x n_p grid of MEMS-II (r in [0, 2/3]) that are optimally
/// broadcastable with local cloners in either group.
SweepCount mems2_local_sweep(int n_r, int n_p, const ScanOptions& opt = {});

}  // namespace qbroadcast::pipelines
