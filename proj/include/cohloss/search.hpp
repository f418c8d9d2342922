// Copyright 2026 The cohloss developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohloss/coherence.hpp"
#include "cohloss/measurement.hpp"

namespace cohloss {

enum class SearchMethod { Grid, Random, Simplex };
std::string search_method_name(SearchMethod m);

/// What gets maximized: C(state) - C(post-measurement state) for a bona fide
/// measure (AbsSum is rejected).
struct LossObjective {
  DensityMatrix state;
  Side side;
  MeasureKind measure;
};

/// Losses below -1e-9 found during a run. These are genuine physics for
/// non-reference bases (such measurements are not incoherent operations and
/// can raise the composite coherence); they are surfaced, not clamped.
struct NegativeLossStats {
  long count = 0;
  double worst = 0.0;  // most negative loss seen, 0 when none

  void record(double loss);
  void merge(const NegativeLossStats& o);
};

inline constexpr double kNegativeLossThreshold = -1e-9;

struct SearchOutcome {
  ProjectiveBasis best_basis;
  double best_loss = 0.0;
  double baseline_loss_reference_basis = 0.0;  // loss at the computational basis
  SearchMethod method = SearchMethod::Grid;
  long evaluations = 0;
  std::uint64_t seed = 0;
  bool converged = true;  // simplex: every restart hit the diameter criterion
  NegativeLossStats negatives;
};

/// C(state) - C(project_local(state, side, basis)). May be genuinely
/// negative away from the reference basis.
double coherence_loss(const LossObjective& obj, const ProjectiveBasis& basis);

/// Exhaustive scan over qubit bases |lambda_0> = (cos(t/2), e^{ip} sin(t/2))
/// with t = pi*i/resolution, p = 2pi*j/resolution (i, j in 0..resolution-1;
/// t = pi repeats the t = 0 channel, so the half-open grid covers every
/// distinct channel and nests exactly when the resolution doubles).
/// Ties broken by scan order (t outer, p inner). Side dimension must be 2,
/// resolution >= 8.
SearchOutcome search_grid_qubit(const LossObjective& obj, int resolution);

/// Best of `samples` Haar-random bases drawn from one stream; deterministic
/// per seed, ties broken by draw order.
SearchOutcome search_random(const LossObjective& obj, int samples,
                            std::uint64_t seed);

struct SimplexOptions {
  int restarts = 8;
  int max_iters = 2000;
  int threads = 1;  // restarts evaluated in parallel, merged by index
};

/// Nelder-Mead descent on -loss over Hermitian generators (basis = exp(iH),
/// d^2 real parameters), standard coefficients (reflect 1, expand 2,
/// contract 1/2, shrink 1/2), converged when the simplex diameter drops
/// below 1e-7. Runs `restarts` random starts plus the computational basis
/// and, when the side dimension is one of {2,3,5,7}, every nontrivial MUB
/// basis, so the result never falls below those baselines.
SearchOutcome search_simplex(const LossObjective& obj,
                             const SimplexOptions& opts, std::uint64_t seed);

struct QiScanSample {
  double loss_computational = 0.0;     // expected 0
  std::vector<double> mub_losses;      // one per nontrivial MUB basis
  double best_mub_loss = 0.0;
  double search_loss = 0.0;            // simplex result
  double chain_comp_residual = 0.0;    // |C(measured in comp) - C(chi)|
  double chain_mixture_residual = 0.0; // |C(chi) - sum_i p_i C(rho_i)|
  double chain_mub_residual = 0.0;     // max_a |C(measured in MUB a) - C(rho_A)|
  double convexity_slack = 0.0;        // C(chi) - C(rho_A), expected >= 0
  double abs_sum_bound_violation = 0.0;  // worst over random bases, expected <= 0
  bool proposition_violated = false;   // best MUB loss > comp loss + 1e-9
  bool search_exceeds_mub = false;     // search loss > best MUB loss + 1e-6
};

struct QiScanReport {
  int dA = 0;
  int dB = 0;
  MeasureKind measure = MeasureKind::L1;
  std::uint64_t seed = 0;
  std::vector<QiScanSample> samples;
  // aggregates
  int proposition_violations = 0;
  int search_exceeding_mub = 0;
  double max_loss_computational = 0.0;
  double max_chain_comp_residual = 0.0;
  double max_chain_mixture_residual = 0.0;
  double max_chain_mub_residual = 0.0;
  double min_convexity_slack = 0.0;
  double max_abs_sum_bound_violation = 0.0;
  NegativeLossStats negatives;
};

/// Samples random QI states and, per sample, compares the loss at the
/// computational basis (expected 0), at every nontrivial MUB basis and under
/// a simplex search; also accumulates the coherence-chain residuals and the
/// post-measurement absolute-sum lower bound on a few random bases.
/// dB must be one of {2,3,5,7}.
QiScanReport qi_scan(int dA, int dB, int samples, std::uint64_t seed,
                     MeasureKind measure, const SimplexOptions& opts = {});

}  // namespace cohloss
