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

#include "cohloss/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>

#include "cohloss/eig.hpp"

namespace cohloss {

namespace {

constexpr double kSimplexDiameterTol = 1e-7;
constexpr double kSimplexInitialStep = 0.25;

int side_dim(const LossObjective& obj) {
  return obj.side == Side::B ? obj.state.dB() : obj.state.dA();
}

void require_bona_fide_measure(const LossObjective& obj) {
  if (obj.measure == MeasureKind::AbsSum) {
    throw ValidationError(
        "loss objectives need a bona fide coherence measure (l1 or relent)", 0.0);
  }
}

// Tracks the argmax over every basis a search evaluates. Ties keep the
// earlier evaluation, so outcomes are deterministic in evaluation order.
class LossTracker {
public:
  LossTracker(const LossObjective& obj)
      : obj_(obj), before_(coherence(obj.measure, obj.state)) {}

  double evaluate(const ComplexMatrix& u) {
    const ProjectiveBasis basis(u);
    const double loss =
        before_ - coherence(obj_.measure, project_local(obj_.state, obj_.side, basis));
    ++evaluations_;
    negatives_.record(loss);
    if (!has_best_ || loss > best_loss_) {
      has_best_ = true;
      best_loss_ = loss;
      best_u_ = u;
    }
    return loss;
  }

  long evaluations() const { return evaluations_; }
  const NegativeLossStats& negatives() const { return negatives_; }
  double best_loss() const { return best_loss_; }
  const ComplexMatrix& best_unitary() const { return best_u_; }
  bool has_best() const { return has_best_; }

private:
  const LossObjective& obj_;
  double before_;
  long evaluations_ = 0;
  NegativeLossStats negatives_;
  bool has_best_ = false;
  double best_loss_ = 0.0;
  ComplexMatrix best_u_{1};
};

SearchOutcome finish_outcome(const LossObjective& obj, SearchMethod method,
                             std::uint64_t seed, const LossTracker& tracker,
                             bool converged) {
  SearchOutcome out{
      ProjectiveBasis(tracker.best_unitary()), tracker.best_loss(),
      coherence_loss(obj, ProjectiveBasis::computational(side_dim(obj))),
      method,
      tracker.evaluations(),
      seed,
      converged,
      tracker.negatives()};
  return out;
}

// ---- Hermitian-generator coordinates for the simplex search ----
// d diagonal reals followed by (re, im) pairs of the strict upper triangle.

ComplexMatrix generator_from_params(const std::vector<double>& x, int d) {
  ComplexMatrix h(d);
  for (int r = 0; r < d; ++r) h(r, r) = x[r];
  int k = d;
  for (int r = 0; r < d; ++r)
    for (int c = r + 1; c < d; ++c) {
      h(r, c) = Complex{x[k], x[k + 1]};
      h(c, r) = Complex{x[k], -x[k + 1]};
      k += 2;
    }
  return h;
}

std::vector<double> params_from_generator(const ComplexMatrix& h) {
  const int d = h.dim();
  std::vector<double> x(static_cast<size_t>(d) * d);
  for (int r = 0; r < d; ++r) x[r] = h(r, r).real();
  int k = d;
  for (int r = 0; r < d; ++r)
    for (int c = r + 1; c < d; ++c) {
      x[k] = h(r, c).real();
      x[k + 1] = h(r, c).imag();
      k += 2;
    }
  return x;
}

struct SimplexRunResult {
  bool converged = false;
  long evaluations = 0;
  double best_loss = 0.0;
  ComplexMatrix best_u{1};
  NegativeLossStats negatives;
};

// Nelder-Mead on -loss, standard coefficients, converged when the max
// pairwise vertex distance drops below kSimplexDiameterTol.
SimplexRunResult run_simplex(const LossObjective& obj,
                             const std::vector<double>& x0, int max_iters) {
  const int d = side_dim(obj);
  const int n = static_cast<int>(x0.size());
  LossTracker tracker(obj);
  const auto f = [&](const std::vector<double>& x) {
    return -tracker.evaluate(unitary_from_generator(generator_from_params(x, d)));
  };

  std::vector<std::vector<double>> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) xs[i][i - 1] += kSimplexInitialStep;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  const auto diameter = [&]() {
    double dmax = 0.0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
          const double diff = xs[i][k] - xs[j][k];
          s += diff * diff;
        }
        dmax = std::max(dmax, s);
      }
    return std::sqrt(dmax);
  };

  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return fs[i] < fs[j]; });
    {
      std::vector<std::vector<double>> xs2(n + 1);
      std::vector<double> fs2(n + 1);
      for (int i = 0; i <= n; ++i) {
        xs2[i] = std::move(xs[order[i]]);
        fs2[i] = fs[order[i]];
      }
      xs = std::move(xs2);
      fs = std::move(fs2);
    }
    if (diameter() < kSimplexDiameterTol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += xs[i][k] / n;

    const auto blend = [&](double coeff) {
      // centroid + coeff * (centroid - worst)
      std::vector<double> x(n);
      for (int k = 0; k < n; ++k)
        x[k] = centroid[k] + coeff * (centroid[k] - xs[n][k]);
      return x;
    };

    const std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fs[0]) {
      const std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
      continue;
    }
    if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
      continue;
    }
    bool shrink = false;
    if (fr < fs[n]) {
      const std::vector<double> xc = blend(0.5);  // outside contraction
      const double fc = f(xc);
      if (fc <= fr) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      const std::vector<double> xc = blend(-0.5);  // inside contraction
      const double fc = f(xc);
      if (fc < fs[n]) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < n; ++k) xs[i][k] = xs[0][k] + 0.5 * (xs[i][k] - xs[0][k]);
        fs[i] = f(xs[i]);
      }
    }
  }

  SimplexRunResult result;
  result.converged = converged;
  result.evaluations = tracker.evaluations();
  result.best_loss = tracker.best_loss();
  result.best_u = tracker.best_unitary();
  result.negatives = tracker.negatives();
  return result;
}

}  // namespace

void NegativeLossStats::record(double loss) {
  if (loss < kNegativeLossThreshold) {
    ++count;
    worst = std::min(worst, loss);
  }
}

void NegativeLossStats::merge(const NegativeLossStats& o) {
  count += o.count;
  worst = std::min(worst, o.worst);
}

std::string search_method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::Grid: return "grid";
    case SearchMethod::Random: return "random";
    case SearchMethod::Simplex: return "simplex";
  }
  return "?";
}

double coherence_loss(const LossObjective& obj, const ProjectiveBasis& basis) {
  require_bona_fide_measure(obj);
  return coherence(obj.measure, obj.state) -
         coherence(obj.measure, project_local(obj.state, obj.side, basis));
}

SearchOutcome search_grid_qubit(const LossObjective& obj, int resolution) {
  require_bona_fide_measure(obj);
  if (side_dim(obj) != 2) {
    throw ValidationError("grid search needs a 2-dimensional side",
                          side_dim(obj));
  }
  if (resolution < 8) {
    throw ValidationError("grid resolution must be at least 8", resolution);
  }
  LossTracker tracker(obj);
  for (int i = 0; i < resolution; ++i) {
    const double theta = std::numbers::pi * i / resolution;
    const double half = 0.5 * theta;
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / resolution;
      const Complex eip{std::cos(phi), std::sin(phi)};
      ComplexMatrix u(2);
      u(0, 0) = std::cos(half);
      u(1, 0) = eip * std::sin(half);
      u(0, 1) = -std::sin(half);
      u(1, 1) = eip * std::cos(half);
      tracker.evaluate(u);
    }
  }
  return finish_outcome(obj, SearchMethod::Grid, 0, tracker, true);
}

SearchOutcome search_random(const LossObjective& obj, int samples,
                            std::uint64_t seed) {
  require_bona_fide_measure(obj);
  if (samples < 1) {
    throw ValidationError("random search needs at least one sample", samples);
  }
  const int d = side_dim(obj);
  RngStream rng(seed);
  LossTracker tracker(obj);
  for (int k = 0; k < samples; ++k) tracker.evaluate(random_unitary(d, rng));
  return finish_outcome(obj, SearchMethod::Random, seed, tracker, true);
}

SearchOutcome search_simplex(const LossObjective& obj,
                             const SimplexOptions& opts, std::uint64_t seed) {
  require_bona_fide_measure(obj);
  if (opts.restarts < 1) {
    throw ValidationError("simplex search needs at least one restart",
                          opts.restarts);
  }
  const int d = side_dim(obj);
  const int n = d * d;
  const RngStream root(seed);

  std::vector<std::vector<double>> starts;
  for (int k = 0; k < opts.restarts; ++k) {
    RngStream stream = root.split(static_cast<std::uint64_t>(k));
    std::vector<double> x0(n);
    for (double& xi : x0)
      xi = (2.0 * stream.next_double() - 1.0) * std::numbers::pi;
    starts.push_back(std::move(x0));
  }
  // Known-good bases always seed extra runs: the computational basis and,
  // when a family exists, every nontrivial MUB basis.
  starts.emplace_back(n, 0.0);
  if (d == 2 || d == 3 || d == 5 || d == 7) {
    const MubFamily fam = mub_family(d);
    for (size_t b = 1; b < fam.bases.size(); ++b) {
      starts.push_back(params_from_generator(
          generator_from_unitary(fam.bases[b].unitary())));
    }
  }

  const int total = static_cast<int>(starts.size());
  std::vector<SimplexRunResult> results(total);
  const int threads = std::max(1, opts.threads);
  if (threads == 1) {
    for (int k = 0; k < total; ++k)
      results[k] = run_simplex(obj, starts[k], opts.max_iters);
  } else {
    std::vector<std::future<void>> workers;
    for (int t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t]() {
        for (int k = t; k < total; k += threads)
          results[k] = run_simplex(obj, starts[k], opts.max_iters);
      }));
    }
    for (auto& w : workers) w.get();
  }

  // ordered merge: equal losses keep the earlier restart
  SearchOutcome out{ProjectiveBasis(ComplexMatrix::identity(d)),
                    -std::numeric_limits<double>::infinity(),
                    coherence_loss(obj, ProjectiveBasis::computational(d)),
                    SearchMethod::Simplex,
                    0,
                    seed,
                    true,
                    {}};
  for (const SimplexRunResult& r : results) {
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
    out.negatives.merge(r.negatives);
    if (r.best_loss > out.best_loss) {
      out.best_loss = r.best_loss;
      out.best_basis = ProjectiveBasis(r.best_u);
    }
  }
  return out;
}

QiScanReport qi_scan(int dA, int dB, int samples, std::uint64_t seed,
                     MeasureKind measure, const SimplexOptions& opts) {
  if (measure == MeasureKind::AbsSum) {
    throw ValidationError(
        "loss objectives need a bona fide coherence measure (l1 or relent)", 0.0);
  }
  if (dB != 2 && dB != 3 && dB != 5 && dB != 7) {
    throw ValidationError("QI scans need dB in {2,3,5,7} for MUB availability",
                          dB);
  }
  if (samples < 0) {
    throw ValidationError("sample count must be nonnegative", samples);
  }

  QiScanReport report;
  report.dA = dA;
  report.dB = dB;
  report.measure = measure;
  report.seed = seed;
  report.min_convexity_slack = std::numeric_limits<double>::infinity();

  const MubFamily fam = mub_family(dB);
  const ProjectiveBasis comp = ProjectiveBasis::computational(dB);
  const RngStream root(seed);

  for (int sample = 0; sample < samples; ++sample) {
    RngStream stream = root.split(static_cast<std::uint64_t>(sample));
    const Ensemble e = random_qi(dA, dB, stream);
    const DensityMatrix chi = qi_state(e, dB);
    const DensityMatrix rho_a = chi.reduced(Side::B);

    const double c_chi = coherence(measure, chi);
    const double c_rho_a = coherence(measure, rho_a);
    double mixture = 0.0;
    for (size_t i = 0; i < e.probs.size(); ++i)
      mixture += e.probs[i] * coherence(measure, e.members[i]);

    QiScanSample rec;
    const double c_after_comp = coherence(measure, project_local(chi, Side::B, comp));
    rec.loss_computational = c_chi - c_after_comp;
    rec.chain_comp_residual = std::abs(c_after_comp - c_chi);
    rec.chain_mixture_residual = std::abs(c_chi - mixture);
    rec.convexity_slack = c_chi - c_rho_a;
    report.negatives.record(rec.loss_computational);

    rec.best_mub_loss = -std::numeric_limits<double>::infinity();
    for (size_t b = 1; b < fam.bases.size(); ++b) {
      const double c_after =
          coherence(measure, project_local(chi, Side::B, fam.bases[b]));
      const double loss = c_chi - c_after;
      rec.mub_losses.push_back(loss);
      rec.best_mub_loss = std::max(rec.best_mub_loss, loss);
      rec.chain_mub_residual =
          std::max(rec.chain_mub_residual, std::abs(c_after - c_rho_a));
      report.negatives.record(loss);
    }

    // post-measurement absolute-sum lower bound on a few random bases
    double rhs = 0.0;
    for (int i = 0; i < dA; ++i)
      for (int k = 0; k < dA; ++k) rhs += std::abs(rho_a.matrix()(i, k));
    rec.abs_sum_bound_violation = -std::numeric_limits<double>::infinity();
    for (int b = 0; b < 5; ++b) {
      const ProjectiveBasis basis(random_unitary(dB, stream));
      const double lhs = abs_sum(project_local(chi, Side::B, basis));
      rec.abs_sum_bound_violation =
          std::max(rec.abs_sum_bound_violation, rhs - lhs);
    }

    const LossObjective obj{chi, Side::B, measure};
    const SearchOutcome search = search_simplex(obj, opts, stream.next_u64());
    rec.search_loss = search.best_loss;
    report.negatives.merge(search.negatives);

    rec.proposition_violated = rec.best_mub_loss > rec.loss_computational + 1e-9;
    rec.search_exceeds_mub = rec.search_loss > rec.best_mub_loss + 1e-6;

    report.proposition_violations += rec.proposition_violated ? 1 : 0;
    report.search_exceeding_mub += rec.search_exceeds_mub ? 1 : 0;
    report.max_loss_computational = std::max(report.max_loss_computational,
                                             std::abs(rec.loss_computational));
    report.max_chain_comp_residual =
        std::max(report.max_chain_comp_residual, rec.chain_comp_residual);
    report.max_chain_mixture_residual =
        std::max(report.max_chain_mixture_residual, rec.chain_mixture_residual);
    report.max_chain_mub_residual =
        std::max(report.max_chain_mub_residual, rec.chain_mub_residual);
    report.min_convexity_slack =
        std::min(report.min_convexity_slack, rec.convexity_slack);
    report.max_abs_sum_bound_violation = std::max(
        report.max_abs_sum_bound_violation, rec.abs_sum_bound_violation);
    report.samples.push_back(std::move(rec));
  }
  if (report.samples.empty()) report.min_convexity_slack = 0.0;
  return report;
}

}  // namespace cohloss
