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

#include "cohloss/measurement.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace cohloss {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kUnbiasedTol = 1e-9;

}  // namespace

ProjectiveBasis::ProjectiveBasis(ComplexMatrix u) : u_(std::move(u)) {
  const double r = unitarity_residual(u_);
  if (r > kUnitaryTol) {
    throw ValidationError("basis matrix must be unitary", r);
  }
}

ProjectiveBasis ProjectiveBasis::computational(int dim) {
  return ProjectiveBasis(ComplexMatrix::identity(dim));
}

bool ProjectiveBasis::is_computational() const {
  for (int r = 0; r < u_.dim(); ++r)
    for (int c = 0; c < u_.dim(); ++c)
      if (u_(r, c) != Complex{r == c ? 1.0 : 0.0, 0.0}) return false;
  return true;
}

ProjectiveBasis dual_basis_qubit() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(2);
  u(0, 0) = inv_sqrt2;
  u(0, 1) = inv_sqrt2;
  u(1, 0) = inv_sqrt2;
  u(1, 1) = -inv_sqrt2;
  return ProjectiveBasis(std::move(u));
}

MubFamily mub_family(int dim) {
  if (dim != 2 && dim != 3 && dim != 5 && dim != 7) {
    throw ValidationError("MUB families exist here only for dim in {2,3,5,7}",
                          dim);
  }
  MubFamily fam{dim, {}};
  fam.bases.push_back(ProjectiveBasis::computational(dim));
  if (dim == 2) {
    fam.bases.push_back(dual_basis_qubit());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix y(2);
    y(0, 0) = inv_sqrt2;
    y(0, 1) = inv_sqrt2;
    y(1, 0) = Complex{0.0, inv_sqrt2};
    y(1, 1) = Complex{0.0, -inv_sqrt2};
    fam.bases.emplace_back(std::move(y));
    return fam;
  }
  // odd prime: column j of basis a has components omega^(a k^2 + j k)/sqrt(d)
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int a = 0; a < dim; ++a) {
    ComplexMatrix u(dim);
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const int e = (a * k * k + j * k) % dim;
        const double angle = 2.0 * std::numbers::pi * e / dim;
        u(k, j) = Complex{std::cos(angle) * inv_sqrt_d,
                          std::sin(angle) * inv_sqrt_d};
      }
    fam.bases.emplace_back(std::move(u));
  }
  return fam;
}

double verify_unbiased(const ProjectiveBasis& b1, const ProjectiveBasis& b2) {
  const int n = b1.dim();
  if (b2.dim() != n) {
    throw ValidationError("bases must share a dimension", b2.dim());
  }
  const double target = 1.0 / n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex overlap{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        overlap += std::conj(b1.unitary()(k, i)) * b2.unitary()(k, j);
      worst = std::max(worst, std::abs(std::norm(overlap) - target));
    }
  return worst;
}

namespace detail {

ComplexMatrix project_sandwich(const ComplexMatrix& m, int dA, int dB,
                               Side side, const ComplexMatrix& u) {
  const int side_dim = (side == Side::B) ? dB : dA;
  ComplexMatrix out(m.dim());
  for (int t = 0; t < side_dim; ++t) {
    ComplexMatrix p(side_dim);
    for (int r = 0; r < side_dim; ++r)
      for (int c = 0; c < side_dim; ++c)
        p(r, c) = u(r, t) * std::conj(u(c, t));
    const ComplexMatrix k = (side == Side::B)
                                ? tensor(ComplexMatrix::identity(dA), p)
                                : tensor(p, ComplexMatrix::identity(dB));
    out += k * m * k;
  }
  return out;
}

}  // namespace detail

DensityMatrix project_local(const DensityMatrix& rho, Side side,
                            const ProjectiveBasis& basis) {
  const int side_dim = (side == Side::B) ? rho.dB() : rho.dA();
  if (basis.dim() != side_dim) {
    throw ValidationError("basis dimension must match the measured side",
                          basis.dim());
  }
  if (basis.is_computational()) {
    // fast path: keep only entries whose measured-side indices agree
    const int dA = rho.dA();
    const int dB = rho.dB();
    ComplexMatrix out(rho.dim());
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dB; ++j)
        for (int k = 0; k < dA; ++k)
          for (int l = 0; l < dB; ++l) {
            const bool keep = (side == Side::B) ? (j == l) : (i == k);
            if (keep) out(i * dB + j, k * dB + l) = rho.matrix()(i * dB + j, k * dB + l);
          }
    return DensityMatrix::unchecked(std::move(out), dA, dB);
  }
  ComplexMatrix out =
      detail::project_sandwich(rho.matrix(), rho.dA(), rho.dB(), side, basis.unitary());
  return DensityMatrix::unchecked(std::move(out), rho.dA(), rho.dB());
}

double mub_collapse_check(const Ensemble& e, int dB,
                          const ProjectiveBasis& basis) {
  const double unbiased =
      verify_unbiased(ProjectiveBasis::computational(dB), basis);
  if (unbiased > kUnbiasedTol) {
    throw ValidationError(
        "basis must be unbiased with respect to the computational basis",
        unbiased);
  }
  const DensityMatrix chi = qi_state(e, dB);
  const DensityMatrix measured = project_local(chi, Side::B, basis);
  ComplexMatrix ident_over_d = ComplexMatrix::identity(dB);
  ident_over_d *= Complex{1.0 / dB, 0.0};
  const ComplexMatrix expected =
      tensor(chi.reduced(Side::B).matrix(), ident_over_d);
  return max_abs_diff(measured.matrix(), expected);
}

}  // namespace cohloss
