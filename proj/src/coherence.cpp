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

#include "cohloss/coherence.hpp"

#include <cmath>

#include "cohloss/eig.hpp"

namespace cohloss {

namespace {

constexpr double kEntropyEigenvalueFloor = 1e-12;

double entropy_bits_of(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > kEntropyEigenvalueFloor) s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace

std::optional<MeasureKind> measure_from_name(std::string_view name) {
  if (name == "l1") return MeasureKind::L1;
  if (name == "relent") return MeasureKind::RelativeEntropy;
  if (name == "abs-sum") return MeasureKind::AbsSum;
  return std::nullopt;
}

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::L1: return "l1";
    case MeasureKind::RelativeEntropy: return "relent";
    case MeasureKind::AbsSum: return "abs-sum";
  }
  return "?";
}

DensityMatrix dephase(const DensityMatrix& rho) {
  const int n = rho.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) out(i, i) = rho.matrix()(i, i);
  return DensityMatrix::unchecked(std::move(out), rho.dA(), rho.dB());
}

double abs_sum(const DensityMatrix& rho) {
  double s = 0.0;
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) s += std::abs(rho.matrix()(r, c));
  return s;
}

double c_l1(const DensityMatrix& rho) {
  double s = 0.0;
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c)
      if (r != c) s += std::abs(rho.matrix()(r, c));
  return s;
}

double entropy_bits(const DensityMatrix& rho) {
  return entropy_bits_of(eig_hermitian(rho.matrix()).eigenvalues);
}

double c_relent(const DensityMatrix& rho) {
  // S(dephased) needs no eigensolver: the diagonal is the spectrum.
  std::vector<double> diag(rho.dim());
  for (int i = 0; i < rho.dim(); ++i) diag[i] = rho.matrix()(i, i).real();
  const double value = entropy_bits_of(diag) - entropy_bits(rho);
  return value < 0.0 ? 0.0 : value;
}

double coherence(MeasureKind kind, const DensityMatrix& rho) {
  switch (kind) {
    case MeasureKind::L1: return c_l1(rho);
    case MeasureKind::RelativeEntropy: return c_relent(rho);
    case MeasureKind::AbsSum: return abs_sum(rho);
  }
  throw Error("unknown measure");
}

double block_additivity_check(const std::vector<double>& probs,
                              const std::vector<DensityMatrix>& blocks,
                              MeasureKind kind) {
  if (probs.size() != blocks.size() || probs.empty()) {
    throw ValidationError("weights and blocks must be nonempty and equal-length",
                          static_cast<double>(probs.size()));
  }
  double psum = 0.0;
  int total_dim = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) {
      throw ValidationError("weights must be nonnegative", probs[i]);
    }
    psum += probs[i];
    total_dim += blocks[i].dim();
  }
  if (std::abs(psum - 1.0) > 1e-9) {
    throw ValidationError("weights must sum to 1", std::abs(psum - 1.0));
  }
  if (total_dim > kMaxDim) {
    throw ValidationError("direct-sum dimension exceeds 64", total_dim);
  }

  ComplexMatrix direct_sum(total_dim);
  int offset = 0;
  double weighted = 0.0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const ComplexMatrix& b = blocks[i].matrix();
    for (int r = 0; r < b.dim(); ++r)
      for (int c = 0; c < b.dim(); ++c)
        direct_sum(offset + r, offset + c) = probs[i] * b(r, c);
    offset += b.dim();
    weighted += probs[i] * coherence(kind, blocks[i]);
  }
  const DensityMatrix joined =
      DensityMatrix::unchecked(std::move(direct_sum), total_dim, 1);
  return std::abs(coherence(kind, joined) - weighted);
}

}  // namespace cohloss
