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

#include "cohloss/rng.hpp"

#include <cmath>
#include <numbers>

namespace cohloss {

namespace {

// SplitMix64 finalizer; also the stream-derivation hash for split().
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(angle);
  has_cached_gaussian_ = true;
  return r * std::cos(angle);
}

Complex RngStream::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

RngStream RngStream::split(std::uint64_t index) const {
  std::uint64_t sm = seed_ ^ (0xD1B54A32D192ED03ULL * (index + 1));
  return RngStream(splitmix64(sm));
}

ComplexMatrix random_ginibre(int dim, RngStream& rng) {
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = rng.next_complex_gaussian();
  return g;
}

ComplexMatrix random_unitary(int dim, RngStream& rng) {
  for (;;) {
    const ComplexMatrix g = random_ginibre(dim, rng);
    // Modified Gram-Schmidt with one re-orthogonalization pass. The pivots
    // r_jj = |v| are real-positive by construction, which is exactly the
    // QR phase convention that makes the result Haar-distributed.
    ComplexMatrix q(dim);
    bool degenerate = false;
    for (int j = 0; j < dim && !degenerate; ++j) {
      std::vector<Complex> v(dim);
      double col_norm = 0.0;
      for (int r = 0; r < dim; ++r) {
        v[r] = g(r, j);
        col_norm += std::norm(v[r]);
      }
      col_norm = std::sqrt(col_norm);
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < j; ++i) {
          Complex proj{0.0, 0.0};
          for (int r = 0; r < dim; ++r) proj += std::conj(q(r, i)) * v[r];
          for (int r = 0; r < dim; ++r) v[r] -= proj * q(r, i);
        }
      }
      double pivot = 0.0;
      for (const Complex& z : v) pivot += std::norm(z);
      pivot = std::sqrt(pivot);
      if (pivot <= 1e-12 * std::max(col_norm, 1.0)) {
        degenerate = true;
        break;
      }
      for (int r = 0; r < dim; ++r) q(r, j) = v[r] / pivot;
    }
    if (!degenerate) return q;
  }
}

}  // namespace cohloss
