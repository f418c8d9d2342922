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

// cohloss: bipartite-coherence bookkeeping and maximal-loss basis search.
//
// Every subcommand prints one JSON report to stdout. Exit codes:
//   0  all checks passed
//   1  a physics check failed
//   2  usage or input error (nothing printed on stdout)

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cohloss/io.hpp"

namespace {

using cohloss::Json;
using cohloss::MeasureKind;
using cohloss::Side;

// Tolerances quoted in reports (scaled by COHLOSS_TOLERANCE_SCALE at
// check time).
constexpr double kExactTol = 1e-12;
constexpr double kEigTol = 1e-9;
constexpr double kChainTol = 1e-8;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

MeasureKind parse_measure(const std::string& name) {
  if (auto m = cohloss::measure_from_name(name)) return *m;
  throw cohloss::ValidationError("unknown measure '" + name + "'", 0.0);
}

Side parse_side(const std::string& name) {
  if (name == "A" || name == "a") return Side::A;
  if (name == "B" || name == "b") return Side::B;
  throw cohloss::ValidationError("side must be A or B", 0.0);
}

cohloss::DensityMatrix load_state_with_dims(const std::string& spec,
                                            const std::string& dims) {
  cohloss::DensityMatrix state = cohloss::load_state(spec);
  if (dims.empty()) return state;
  int dA = 0, dB = 0;
  char x = 0;
  if (std::sscanf(dims.c_str(), "%d%c%d", &dA, &x, &dB) != 3 || x != 'x') {
    throw cohloss::ValidationError("--dims must look like 2x2", 0.0);
  }
  return state.with_dims(dA, dB);
}

double measure_tol(MeasureKind m) {
  return m == MeasureKind::L1 ? kExactTol : kEigTol;
}

int emit(const cohloss::ReportBuilder& report, const Timer& timer) {
  std::cout << report.finish(timer.ms()).dump(2) << "\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_verify_counterexample(const std::string& measure_name) {
  Timer timer;
  const MeasureKind measure = parse_measure(measure_name);
  if (measure == MeasureKind::AbsSum) {
    throw cohloss::ValidationError("verify-counterexample needs l1 or relent", 0.0);
  }
  cohloss::ReportBuilder report("verify-counterexample",
                                Json{{"measure", measure_name}}, 0);

  const auto rho = cohloss::counterexample_state();
  const double tol = measure_tol(measure);
  const double before = cohloss::coherence(measure, rho);
  report.check("coherence_before", Json{{"value", before}, {"expected", 1.0}},
               std::abs(before - 1.0), tol);

  const auto comp = cohloss::ProjectiveBasis::computational(2);
  const auto after_comp = cohloss::project_local(rho, Side::B, comp);
  report.check("computational_measurement_keeps_state", Json{},
               max_abs_diff(after_comp.matrix(), rho.matrix()), kExactTol);
  const double loss_comp = before - cohloss::coherence(measure, after_comp);
  report.check("computational_loss_zero", Json{{"loss", loss_comp}},
               std::abs(loss_comp), tol);

  const auto dual = cohloss::dual_basis_qubit();
  const auto after_dual = cohloss::project_local(rho, Side::B, dual);
  report.check(
      "dual_measurement_gives_maximally_mixed", Json{},
      max_abs_diff(after_dual.matrix(), cohloss::maximally_mixed(4).matrix()),
      kExactTol);
  const double loss_dual = before - cohloss::coherence(measure, after_dual);
  report.check("dual_loss_total", Json{{"loss", loss_dual}, {"expected", 1.0}},
               std::abs(loss_dual - 1.0), tol);

  // the point: the reference-basis measurement is not the maximal-loss one,
  // and the gap is exactly one unit of coherence
  report.check("dual_beats_computational",
               Json{{"loss_dual", loss_dual}, {"loss_computational", loss_comp}},
               std::abs((loss_dual - loss_comp) - 1.0), tol);
  return emit(report, timer);
}

int cmd_measure(const std::string& state_spec, const std::string& measure_name,
                const std::string& dims) {
  Timer timer;
  const MeasureKind measure = parse_measure(measure_name);
  const auto state = load_state_with_dims(state_spec, dims);
  cohloss::ReportBuilder report(
      "measure", Json{{"state", state_spec}, {"measure", measure_name}, {"dims", dims}},
      0);
  Json values;
  values["value"] = cohloss::coherence(measure, state);
  values["abs_sum"] = cohloss::abs_sum(state);
  values["reduced_A"] = cohloss::coherence(measure, state.reduced(Side::B));
  values["reduced_B"] = cohloss::coherence(measure, state.reduced(Side::A));
  report.finding("coherence", values);
  return emit(report, timer);
}

int cmd_project(const std::string& state_spec, const std::string& side_name,
                const std::string& basis_spec, const std::string& out_path,
                const std::string& measure_name, const std::string& dims) {
  Timer timer;
  const MeasureKind measure = parse_measure(measure_name);
  const Side side = parse_side(side_name);
  const auto state = load_state_with_dims(state_spec, dims);
  const int side_dim = side == Side::B ? state.dB() : state.dA();
  const auto basis = cohloss::load_basis(basis_spec, side_dim);

  cohloss::ReportBuilder report("project",
                                Json{{"state", state_spec},
                                     {"side", side_name},
                                     {"basis", basis_spec},
                                     {"measure", measure_name},
                                     {"dims", dims}},
                                0);
  const auto projected = cohloss::project_local(state, side, basis);
  const double before = cohloss::coherence(measure, state);
  const double after = cohloss::coherence(measure, projected);
  report.finding("coherence", Json{{"before", before},
                                   {"after", after},
                                   {"loss", before - after}});
  report.check("trace_preserved", Json{},
               std::abs(projected.matrix().trace() - cohloss::Complex{1.0, 0.0}),
               kExactTol);
  if (!out_path.empty()) {
    cohloss::write_json_file(out_path, cohloss::state_to_json(projected));
    report.finding("written", Json{{"path", out_path}});
  }
  return emit(report, timer);
}

int cmd_mub(int dim, bool check) {
  Timer timer;
  const auto fam = cohloss::mub_family(dim);
  cohloss::ReportBuilder report("mub", Json{{"dim", dim}, {"check", check}}, 0);
  Json bases = Json::array();
  for (const auto& b : fam.bases) bases.push_back(cohloss::basis_to_json(b));
  report.finding("family", Json{{"count", fam.bases.size()}, {"bases", bases}});
  if (check) {
    double worst = 0.0;
    for (size_t i = 0; i < fam.bases.size(); ++i)
      for (size_t j = i + 1; j < fam.bases.size(); ++j)
        worst = std::max(worst,
                         cohloss::verify_unbiased(fam.bases[i], fam.bases[j]));
    report.check("pairwise_unbiasedness", Json{{"max_residual", worst}}, worst,
                 kEigTol);
  }
  return emit(report, timer);
}

int cmd_scan_qi(int dA, int dB, int samples, std::uint64_t seed,
                const std::string& measure_name, int restarts, int max_iters,
                int threads) {
  Timer timer;
  const MeasureKind measure = parse_measure(measure_name);
  cohloss::SimplexOptions opts;
  opts.restarts = restarts;
  opts.max_iters = max_iters;
  opts.threads = threads;
  const auto scan = cohloss::qi_scan(dA, dB, samples, seed, measure, opts);

  cohloss::ReportBuilder report("scan-qi",
                                Json{{"dA", dA},
                                     {"dB", dB},
                                     {"samples", samples},
                                     {"measure", measure_name},
                                     {"restarts", restarts},
                                     {"max_iters", max_iters}},
                                seed);
  report.check("reference_basis_loss_zero", Json{},
               scan.max_loss_computational, kEigTol);
  report.check("chain_comp_measurement_preserves_coherence", Json{},
               scan.max_chain_comp_residual, kEigTol);
  report.check("chain_mixture_additivity", Json{},
               scan.max_chain_mixture_residual, kChainTol);
  report.check("chain_mub_collapse", Json{}, scan.max_chain_mub_residual,
               kChainTol);
  report.check("chain_convexity", Json{{"min_slack", scan.min_convexity_slack}},
               -scan.min_convexity_slack, kEigTol);
  report.check("abs_sum_lower_bound", Json{},
               scan.max_abs_sum_bound_violation, kEigTol);
  report.finding("scan", cohloss::qi_scan_to_json(scan));
  return emit(report, timer);
}

int cmd_search(const std::string& state_spec, const std::string& side_name,
               const std::string& method, int resolution, int samples,
               int restarts, int max_iters, int threads, std::uint64_t seed,
               const std::string& measure_name, const std::string& dims) {
  Timer timer;
  const MeasureKind measure = parse_measure(measure_name);
  const Side side = parse_side(side_name);
  const auto state = load_state_with_dims(state_spec, dims);
  const cohloss::LossObjective obj{state, side, measure};

  std::optional<cohloss::SearchOutcome> outcome;
  if (method == "grid") {
    outcome = cohloss::search_grid_qubit(obj, resolution);
  } else if (method == "random") {
    outcome = cohloss::search_random(obj, samples, seed);
  } else if (method == "simplex") {
    cohloss::SimplexOptions opts;
    opts.restarts = restarts;
    opts.max_iters = max_iters;
    opts.threads = threads;
    outcome = cohloss::search_simplex(obj, opts, seed);
  } else {
    throw cohloss::ValidationError("method must be grid, random or simplex", 0.0);
  }

  cohloss::ReportBuilder report("search",
                                Json{{"state", state_spec},
                                     {"side", side_name},
                                     {"method", method},
                                     {"measure", measure_name},
                                     {"resolution", resolution},
                                     {"samples", samples},
                                     {"restarts", restarts},
                                     {"max_iters", max_iters},
                                     {"dims", dims}},
                                seed);
  report.finding("outcome", cohloss::outcome_to_json(*outcome));

  // MUB baselines, when a family exists for the side dimension
  const int sd = side == Side::B ? state.dB() : state.dA();
  if (sd == 2 || sd == 3 || sd == 5 || sd == 7) {
    const auto fam = cohloss::mub_family(sd);
    Json mub_losses = Json::array();
    for (size_t b = 1; b < fam.bases.size(); ++b)
      mub_losses.push_back(cohloss::coherence_loss(obj, fam.bases[b]));
    report.finding("baseline_losses_mub", Json{{"losses", mub_losses}});
  }

  const double recomputed = cohloss::coherence_loss(obj, outcome->best_basis);
  report.check("best_loss_recomputation",
               Json{{"best_loss", outcome->best_loss}, {"recomputed", recomputed}},
               std::abs(recomputed - outcome->best_loss), kExactTol);
  return emit(report, timer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite-coherence bookkeeping and maximal-loss basis search"};
  app.require_subcommand(1);

  std::string measure = "l1";
  std::string state_spec;
  std::string side = "B";
  std::string basis_spec;
  std::string out_path;
  std::string dims;
  int dim = 2;
  bool check = false;
  int dA = 2, dB = 2;
  int samples = 1000;
  std::uint64_t seed = 0;
  int resolution = 64;
  int restarts = 8;
  int max_iters = 2000;
  int threads = 1;
  std::string method = "simplex";

  auto* verify = app.add_subcommand("verify-counterexample",
                                    "reproduce the two-qubit counterexample");
  verify->add_option("--measure", measure, "l1 or relent");

  auto* measure_cmd = app.add_subcommand("measure", "coherence of a state");
  measure_cmd->add_option("--state", state_spec, "state file or preset")->required();
  measure_cmd->add_option("--measure", measure, "l1, relent or abs-sum");
  measure_cmd->add_option("--dims", dims, "reinterpret bipartition, e.g. 2x2");

  auto* project = app.add_subcommand("project", "local projective measurement");
  project->add_option("--state", state_spec)->required();
  project->add_option("--side", side, "A or B");
  project->add_option("--basis", basis_spec,
                      "computational | dual | mub:<a> | basis file")
      ->required();
  project->add_option("--out", out_path, "write the post-measurement state");
  project->add_option("--measure", measure);
  project->add_option("--dims", dims);

  auto* mub = app.add_subcommand("mub", "mutually unbiased basis family");
  mub->add_option("--dim", dim, "2, 3, 5 or 7")->required();
  mub->add_flag("--check", check, "verify pairwise unbiasedness");

  auto* scan = app.add_subcommand("scan-qi", "survey random quantum-incoherent states");
  scan->add_option("--dA", dA)->required();
  scan->add_option("--dB", dB)->required();
  scan->add_option("--samples", samples)->required();
  scan->add_option("--seed", seed);
  scan->add_option("--measure", measure);
  scan->add_option("--restarts", restarts);
  scan->add_option("--max-iters", max_iters);
  scan->add_option("--threads", threads);

  auto* search = app.add_subcommand("search", "maximize coherence loss over bases");
  search->add_option("--state", state_spec)->required();
  search->add_option("--side", side);
  search->add_option("--method", method, "grid | random | simplex")->required();
  search->add_option("--resolution", resolution, "grid: points per angle");
  search->add_option("--samples", samples, "random: bases to draw");
  search->add_option("--restarts", restarts, "simplex: random starts");
  search->add_option("--max-iters", max_iters, "simplex: iteration cap");
  search->add_option("--threads", threads);
  search->add_option("--seed", seed);
  search->add_option("--measure", measure);
  search->add_option("--dims", dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify_counterexample(measure);
    if (measure_cmd->parsed()) return cmd_measure(state_spec, measure, dims);
    if (project->parsed())
      return cmd_project(state_spec, side, basis_spec, out_path, measure, dims);
    if (mub->parsed()) return cmd_mub(dim, check);
    if (scan->parsed())
      return cmd_scan_qi(dA, dB, samples, seed, measure, restarts, max_iters,
                         threads);
    if (search->parsed())
      return cmd_search(state_spec, side, method, resolution, samples, restarts,
                        max_iters, threads, seed, measure, dims);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
