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

#include "cohloss/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cohloss {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kOffDiagonalTol = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    throw ValidationError("eigensolver input must be Hermitian", herm);
  }
  const int n = m.dim();

  // Symmetrize away the sub-tolerance asymmetry so the rotations see an
  // exactly Hermitian matrix.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = (off_diagonal_frobenius(a) < kOffDiagonalTol);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double absa = std::abs(apq);
        if (absa == 0.0) continue;
        // Unitary Jacobi rotation J with J(p,p)=J(q,q)=c,
        // J(p,q) = -s e^{i phi}, J(q,p) = s e^{-i phi}, phi = arg(apq),
        // chosen so (J^dag A J)(p,q) = 0 with |theta| <= pi/4.
        const Complex phase = apq / absa;
        const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * absa);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex se_pos = s * phase;             // s e^{i phi}
        const Complex se_neg = s * std::conj(phase);  // s e^{-i phi}
        // columns: A <- A J
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + se_neg * akq;
          a(k, q) = -se_pos * akp + c * akq;
        }
        // rows: A <- J^dag A
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + se_pos * aqk;
          a(q, k) = -se_neg * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + se_neg * vkq;
          v(k, q) = -se_pos * vkp + c * vkq;
        }
      }
    }
    converged = (off_diagonal_frobenius(a) < kOffDiagonalTol);
  }
  if (!converged) {
    throw Error("eigensolver did not converge within 100 sweeps; off-diagonal "
                "residual = " +
                std::to_string(off_diagonal_frobenius(a)));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix unitary_from_generator(const ComplexMatrix& h) {
  const EigenDecomposition ed = eig_hermitian(h);
  const int n = h.dim();
  const ComplexMatrix& vec = ed.eigenvectors;
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const Complex ph{std::cos(ed.eigenvalues[k]), std::sin(ed.eigenvalues[k])};
        s += vec(r, k) * ph * std::conj(vec(c, k));
      }
      out(r, c) = s;
    }
  return out;
}

ComplexMatrix generator_from_unitary(const ComplexMatrix& u) {
  const double ur = unitarity_residual(u);
  if (ur > 1e-9) {
    throw ValidationError("logarithm input must be unitary", ur);
  }
  const int n = u.dim();
  const ComplexMatrix udag = u.adjoint();

  // cos and sin parts of u; Hermitian and commuting, so a generic real
  // combination shares u's eigenvectors.
  ComplexMatrix cos_part(n);
  ComplexMatrix sin_part(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cos_part(r, c) = 0.5 * (u(r, c) + udag(r, c));
      sin_part(r, c) = Complex{0.0, -0.5} * (u(r, c) - udag(r, c));
    }

  // If the mix constant collides two distinct eigenphases the conjugated u
  // is not diagonal; retry with another generic constant.
  for (const double mix : {0.6180339887498949, 1.3247179572447458, 0.3247179572447458}) {
    ComplexMatrix combo = cos_part;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) combo(r, c) += mix * sin_part(r, c);
    const EigenDecomposition ed = eig_hermitian(combo);
    const ComplexMatrix d = ed.eigenvectors.adjoint() * u * ed.eigenvectors;
    double off = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c) off = std::max(off, std::abs(d(r, c)));
    if (off > 1e-8) continue;

    ComplexMatrix h(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Complex s{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
          const double theta = std::arg(d(k, k));
          s += ed.eigenvectors(r, k) * theta * std::conj(ed.eigenvectors(c, k));
        }
        h(r, c) = s;
      }
    // enforce exact Hermiticity of the result
    for (int r = 0; r < n; ++r) {
      h(r, r) = Complex{h(r, r).real(), 0.0};
      for (int c = r + 1; c < n; ++c) {
        const Complex avg = 0.5 * (h(r, c) + std::conj(h(c, r)));
        h(r, c) = avg;
        h(c, r) = std::conj(avg);
      }
    }
    if (max_abs_diff(unitary_from_generator(h), u) < 1e-8) return h;
  }
  throw Error("could not compute a Hermitian logarithm of the unitary");
}

}  // namespace cohloss
