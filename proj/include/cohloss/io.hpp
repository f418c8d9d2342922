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

#include <string>

#include <json.hpp>

#include "cohloss/search.hpp"

namespace cohloss {

// All file formats are JSON. Complex entries serialize as [re, im] pairs;
// doubles use shortest-round-trip formatting, so write-then-read reproduces
// every entry exactly and repeated runs are byte-identical.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"name"?: str, "dims": [dA, dB], "matrix": [[[re,im],...],...]}
Json state_to_json(const DensityMatrix& s, const std::string& name = "");
DensityMatrix state_from_json(const Json& j);

/// {"dim": d, "unitary": [[[re,im],...],...]} - columns are basis vectors.
Json basis_to_json(const ProjectiveBasis& b);
ProjectiveBasis basis_from_json(const Json& j);

Json outcome_to_json(const SearchOutcome& o);
Json qi_scan_to_json(const QiScanReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Preset name or path to a state file.
DensityMatrix load_state(const std::string& file_or_preset);

/// "computational" | "dual" | "mub:<a>" | path to a basis file. The side
/// dimension fixes what the named specs expand to.
ProjectiveBasis load_basis(const std::string& spec, int side_dim);

/// Multiplier applied to every report pass/fail tolerance, from the
/// COHLOSS_TOLERANCE_SCALE environment variable (default 1; debugging aid).
double tolerance_scale();

/// Accumulates named checks into the machine-readable report emitted by
/// every CLI command. Verdict is "pass" iff every residual is within its
/// scaled tolerance. Wall time is excluded from the determinism contract.
class ReportBuilder {
public:
  ReportBuilder(std::string command, Json args, std::uint64_t seed);

  /// Pass/fail record: |residual| <= tolerance * scale.
  void check(const std::string& name, Json values, double residual,
             double tolerance);

  /// Informational record (findings are reported, never pass/fail).
  void finding(const std::string& name, Json values);

  bool all_passed() const { return all_passed_; }
  Json finish(double wall_time_ms) const;

private:
  Json report_;
  Json checks_ = Json::array();
  double scale_;
  bool all_passed_ = true;
};

}  // namespace cohloss
