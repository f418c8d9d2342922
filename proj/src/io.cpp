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

#include "cohloss/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <utility>

namespace cohloss {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("matrix must be a nonempty array of rows", 0.0);
  }
  std::vector<std::vector<Complex>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) {
      throw ValidationError("matrix rows must be arrays", 0.0);
    }
    std::vector<Complex> out_row;
    for (const Json& entry : row) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ValidationError("matrix entries must be [re, im] pairs", 0.0);
      }
      out_row.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    rows.push_back(std::move(out_row));
  }
  return ComplexMatrix::from_rows(rows);
}

Json state_to_json(const DensityMatrix& s, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["dims"] = Json::array({s.dA(), s.dB()});
  j["matrix"] = matrix_to_json(s.matrix());
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw ValidationError("state files need 'dims' and 'matrix' fields", 0.0);
  }
  const Json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() ||
      !dims[1].is_number_integer()) {
    throw ValidationError("'dims' must be an [dA, dB] integer pair", 0.0);
  }
  return DensityMatrix::validate(matrix_from_json(j["matrix"]),
                                 dims[0].get<int>(), dims[1].get<int>());
}

Json basis_to_json(const ProjectiveBasis& b) {
  Json j;
  j["dim"] = b.dim();
  j["unitary"] = matrix_to_json(b.unitary());
  return j;
}

ProjectiveBasis basis_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("unitary")) {
    throw ValidationError("basis files need a 'unitary' field", 0.0);
  }
  ComplexMatrix u = matrix_from_json(j["unitary"]);
  if (j.contains("dim") && j["dim"].get<int>() != u.dim()) {
    throw ValidationError("basis 'dim' disagrees with the matrix",
                          j["dim"].get<double>());
  }
  return ProjectiveBasis(std::move(u));
}

namespace {

Json negatives_to_json(const NegativeLossStats& n) {
  Json j;
  j["count"] = n.count;
  j["worst"] = n.worst;
  return j;
}

}  // namespace

Json outcome_to_json(const SearchOutcome& o) {
  Json j;
  j["method"] = search_method_name(o.method);
  j["best_loss"] = o.best_loss;
  j["baseline_loss_computational"] = o.baseline_loss_reference_basis;
  j["evaluations"] = o.evaluations;
  j["seed"] = o.seed;
  j["converged"] = o.converged;
  j["negative_losses"] = negatives_to_json(o.negatives);
  j["best_basis"] = basis_to_json(o.best_basis);
  return j;
}

Json qi_scan_to_json(const QiScanReport& r) {
  Json j;
  j["dA"] = r.dA;
  j["dB"] = r.dB;
  j["measure"] = measure_name(r.measure);
  j["seed"] = r.seed;
  j["samples"] = r.samples.size();
  j["proposition_violations"] = r.proposition_violations;
  j["violation_fraction"] =
      r.samples.empty()
          ? 0.0
          : static_cast<double>(r.proposition_violations) / r.samples.size();
  j["search_exceeding_mub"] = r.search_exceeding_mub;
  j["max_loss_computational"] = r.max_loss_computational;
  j["max_chain_comp_residual"] = r.max_chain_comp_residual;
  j["max_chain_mixture_residual"] = r.max_chain_mixture_residual;
  j["max_chain_mub_residual"] = r.max_chain_mub_residual;
  j["min_convexity_slack"] = r.min_convexity_slack;
  j["max_abs_sum_bound_violation"] = r.max_abs_sum_bound_violation;
  j["negative_losses"] = negatives_to_json(r.negatives);
  Json per_sample = Json::array();
  for (const QiScanSample& s : r.samples) {
    Json rec;
    rec["loss_computational"] = s.loss_computational;
    rec["mub_losses"] = s.mub_losses;
    rec["search_loss"] = s.search_loss;
    rec["chain_comp_residual"] = s.chain_comp_residual;
    rec["chain_mixture_residual"] = s.chain_mixture_residual;
    rec["chain_mub_residual"] = s.chain_mub_residual;
    rec["convexity_slack"] = s.convexity_slack;
    rec["abs_sum_bound_violation"] = s.abs_sum_bound_violation;
    rec["proposition_violated"] = s.proposition_violated;
    rec["search_exceeds_mub"] = s.search_exceeds_mub;
    per_sample.push_back(std::move(rec));
  }
  j["per_sample"] = std::move(per_sample);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("failed to parse '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

DensityMatrix load_state(const std::string& file_or_preset) {
  if (auto preset = preset_state(file_or_preset)) return *preset;
  return state_from_json(read_json_file(file_or_preset));
}

ProjectiveBasis load_basis(const std::string& spec, int side_dim) {
  if (spec == "computational") return ProjectiveBasis::computational(side_dim);
  if (spec == "dual") {
    if (side_dim != 2) {
      throw ValidationError("the dual basis is a qubit basis", side_dim);
    }
    return dual_basis_qubit();
  }
  if (spec.rfind("mub:", 0) == 0) {
    int index = -1;
    try {
      index = std::stoi(spec.substr(4));
    } catch (const std::exception&) {
      throw ValidationError("bad MUB index in '" + spec + "'", 0.0);
    }
    const MubFamily fam = mub_family(side_dim);
    const int nontrivial = static_cast<int>(fam.bases.size()) - 1;
    if (index < 0 || index >= nontrivial) {
      throw ValidationError("MUB index out of range [0, " +
                                std::to_string(nontrivial - 1) + "]",
                            index);
    }
    return fam.bases[static_cast<size_t>(index) + 1];
  }
  ProjectiveBasis b = basis_from_json(read_json_file(spec));
  if (b.dim() != side_dim) {
    throw ValidationError("basis dimension must match the measured side",
                          b.dim());
  }
  return b;
}

double tolerance_scale() {
  const char* raw = std::getenv("COHLOSS_TOLERANCE_SCALE");
  if (raw == nullptr || *raw == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || v <= 0.0 || !std::isfinite(v)) {
    throw Error("COHLOSS_TOLERANCE_SCALE must be a positive number");
  }
  return v;
}

ReportBuilder::ReportBuilder(std::string command, Json args, std::uint64_t seed)
    : scale_(tolerance_scale()) {
  report_["command"] = std::move(command);
  report_["args"] = std::move(args);
  report_["seed"] = seed;
  report_["tolerance_scale"] = scale_;
}

void ReportBuilder::check(const std::string& name, Json values,
                          double residual, double tolerance) {
  // one-sided: negative residuals are always within tolerance
  const bool pass = residual <= tolerance * scale_;
  Json c;
  c["name"] = name;
  c["values"] = std::move(values);
  c["residual"] = residual;
  c["tolerance"] = tolerance;
  c["pass"] = pass;
  checks_.push_back(std::move(c));
  all_passed_ = all_passed_ && pass;
}

void ReportBuilder::finding(const std::string& name, Json values) {
  Json c;
  c["name"] = name;
  c["values"] = std::move(values);
  checks_.push_back(std::move(c));
}

Json ReportBuilder::finish(double wall_time_ms) const {
  Json out = report_;
  out["checks"] = checks_;
  out["verdict"] = all_passed_ ? "pass" : "fail";
  out["wall_time_ms"] = wall_time_ms;
  return out;
}

}  // namespace cohloss
