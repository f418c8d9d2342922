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

#include "cohloss/matrix.hpp"

namespace cohloss {

/// Deterministic 64-bit random stream: xoshiro256++ state seeded through the
/// SplitMix64 finalizer. The algorithm is part of the output contract and
/// must not change across releases; identical seeds yield identical streams
/// on every platform (no libstdc++ distributions are used).
class RngStream {
public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53 random bits.
  double next_double();

  /// Standard normal via Box-Muller (pairs cached).
  double next_gaussian();

  /// Re and Im independently standard normal, so E|z|^2 = 2.
  Complex next_complex_gaussian();

  /// Independent child stream number `index`. Derived from the construction
  /// seed only, so the result does not depend on how much the parent has
  /// already been consumed.
  RngStream split(std::uint64_t index) const;

private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

/// dim x dim matrix of independent complex Gaussians (Re, Im each N(0,1)).
ComplexMatrix random_ginibre(int dim, RngStream& rng);

/// Haar-random unitary: QR orthonormalization of a Ginibre draw with R's
/// diagonal real-positive. Resamples on (measure-zero) rank deficiency.
ComplexMatrix random_unitary(int dim, RngStream& rng);

}  // namespace cohloss
