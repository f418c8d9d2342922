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
#include <string_view>
#include <vector>

#include "cohloss/states.hpp"

namespace cohloss {

// Coherence is always taken with respect to the computational product basis
// of the stored matrix; measuring it in another basis is expressed by
// conjugating the state, never by parameterizing the measure.

enum class MeasureKind { L1, RelativeEntropy, AbsSum };

/// CLI vocabulary: "l1", "relent", "abs-sum".
std::optional<MeasureKind> measure_from_name(std::string_view name);
std::string measure_name(MeasureKind kind);

/// Deletes every off-diagonal entry of the composite reference basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// Sum of |entry| over ALL entries. For a valid state this is 1 + c_l1
/// because the diagonal is real nonnegative with unit sum. Not a coherence
/// measure (nonzero on incoherent states); kept as its own quantity because
/// several identities are stated directly in terms of it.
double abs_sum(const DensityMatrix& rho);

/// l1-norm of coherence: sum of |entry| over off-diagonal entries.
double c_l1(const DensityMatrix& rho);

/// Relative entropy of coherence S(dephase(rho)) - S(rho), in bits.
/// Eigenvalues below 1e-12 contribute zero; tiny negatives are reported
/// as 0.
double c_relent(const DensityMatrix& rho);

double coherence(MeasureKind kind, const DensityMatrix& rho);

/// Von Neumann entropy in bits (log base 2).
double entropy_bits(const DensityMatrix& rho);

/// Builds the direct sum (+)_i p_i rho_i and returns
/// |C(direct sum) - sum_i p_i C(rho_i)| for the given measure.
/// Rejects composite dimensions above kMaxDim.
double block_additivity_check(const std::vector<double>& probs,
                              const std::vector<DensityMatrix>& blocks,
                              MeasureKind kind);

}  // namespace cohloss
