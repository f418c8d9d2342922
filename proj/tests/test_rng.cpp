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

#include <doctest.h>

#include "cohloss/rng.hpp"

using namespace cohloss;

TEST_CASE("identical seeds yield identical streams") {
  RngStream a(12345);
  RngStream b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  const ComplexMatrix ga = random_ginibre(4, a);
  const ComplexMatrix gb = random_ginibre(4, b);
  CHECK(max_abs_diff(ga, gb) == 0.0);
}

TEST_CASE("different seeds and split streams differ") {
  RngStream a(1);
  RngStream b(2);
  CHECK(a.next_u64() != b.next_u64());

  RngStream parent(7);
  RngStream c0 = parent.split(0);
  RngStream c1 = parent.split(1);
  CHECK(c0.next_u64() != c1.next_u64());
}

TEST_CASE("split does not depend on parent consumption") {
  RngStream parent(99);
  RngStream before = parent.split(5);
  parent.next_u64();
  parent.next_gaussian();
  RngStream after = parent.split(5);
  for (int i = 0; i < 10; ++i) CHECK(before.next_u64() == after.next_u64());
}

TEST_CASE("uniform doubles live in [0,1)") {
  RngStream rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("ginibre dim=1 is a single complex scalar") {
  RngStream rng(4);
  const ComplexMatrix g = random_ginibre(1, rng);
  CHECK(g.dim() == 1);
  CHECK(std::isfinite(g(0, 0).real()));
}

TEST_CASE("ginibre entries have E|z|^2 = 2 (Re, Im each unit variance)") {
  RngStream rng(5);
  double sum = 0.0;
  long count = 0;
  for (int sample = 0; sample < 10000; ++sample) {
    const ComplexMatrix g = random_ginibre(4, rng);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) sum += std::norm(g(r, c));
    count += 16;
  }
  const double mean = sum / count;
  CHECK(mean == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("random unitaries are unitary across 100 seeds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RngStream rng(seed);
    const ComplexMatrix u = random_unitary(4, rng);
    CHECK(unitarity_residual(u) < 1e-9);
  }
}

TEST_CASE("random unitary dim=1 is a unimodular number") {
  RngStream rng(6);
  const ComplexMatrix u = random_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("Haar first-column statistics: mean |U_00|^2 = 1/dim") {
  RngStream rng(8);
  const int dim = 3;
  double sum = 0.0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix u = random_unitary(dim, rng);
    sum += std::norm(u(0, 0));
  }
  CHECK(sum / samples == doctest::Approx(1.0 / dim).epsilon(0.05));
}
