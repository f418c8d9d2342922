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

#include <optional>
#include <string>
#include <vector>

#include "cohloss/matrix.hpp"
#include "cohloss/rng.hpp"

namespace cohloss {

/// Validated quantum state on an A (x) B bipartition (dA*dB = dim).
/// Single-partite states use dB = 1. Invariants: Hermitian to 1e-9, unit
/// trace to 1e-9, minimum eigenvalue >= -1e-9.
class DensityMatrix {
public:
  /// Checks all invariants; throws ValidationError naming the violated one
  /// and its residual.
  static DensityMatrix validate(ComplexMatrix mat, int dA, int dB);

  /// Skips the eigenvalue check. For outputs that are positive by
  /// construction (channel outputs, convex mixtures of validated states).
  static DensityMatrix unchecked(ComplexMatrix mat, int dA, int dB);

  const ComplexMatrix& matrix() const { return mat_; }
  int dA() const { return dA_; }
  int dB() const { return dB_; }
  int dim() const { return mat_.dim(); }

  /// Reduced state with the named subsystem traced out; the result is
  /// single-partite (dB = 1).
  DensityMatrix reduced(Side traced) const;

  /// Same matrix, reinterpreted under a different bipartition.
  DensityMatrix with_dims(int dA, int dB) const;

private:
  DensityMatrix(ComplexMatrix mat, int dA, int dB);

  ComplexMatrix mat_;
  int dA_;
  int dB_;
};

/// Probability-weighted states on A tagged with distinct reference-basis
/// labels on B; the raw material of quantum-incoherent states.
struct Ensemble {
  std::vector<double> probs;
  std::vector<DensityMatrix> members;  // all dB == 1, shared dA
  std::vector<int> labels;
};

/// The 2x2 (x) 2x2 state mixing |+><+| (x) |0><0| and |-><-| (x) |1><1|
/// with equal weight. Entries are exactly +-1/4.
DensityMatrix counterexample_state();

/// Identity/dim, single-partite.
DensityMatrix maximally_mixed(int dim);

/// |psi><psi| with psi = (1/sqrt(dim)) sum_i |i>, single-partite.
DensityMatrix maximally_coherent(int dim);

/// sum_i p_i rho_i (x) |label_i><label_i| on a dB-dimensional B side.
/// Rejects duplicate labels, labels >= dB and broken ensemble invariants.
DensityMatrix qi_state(const Ensemble& e, int dB);

/// G G^dag / tr(G G^dag) with G a dim x rank Ginibre block. rank = dim gives
/// full support almost surely; rank 1 gives a pure state.
DensityMatrix random_density(int dim, int rank, RngStream& rng);

/// dB full-rank members of dimension dA, labels 0..dB-1, probabilities from
/// normalized independent exponentials (flat Dirichlet).
Ensemble random_qi(int dA, int dB, RngStream& rng);

/// Named presets: "counterexample", "maxmix:<d>", "maxcoh:<d>".
/// Returns nullopt when the name is not a preset.
std::optional<DensityMatrix> preset_state(const std::string& name);

}  // namespace cohloss
