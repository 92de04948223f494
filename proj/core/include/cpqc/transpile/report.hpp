// Copyright 2026 The CPQC Authors
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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cpqc/transpile/decompose.hpp"

namespace cpqc::transpile {

struct StageCounts {
  int cnot = 0;
  int single_qubit = 0;

  friend bool operator==(const StageCounts&, const StageCounts&) = default;
};

/// Counts over the CNOT + U3 basis.
struct ResourceReport {
  int cnot_count = 0;
  /// Longest chain under greedy as-soon-as-possible scheduling with unit
  /// gate durations.
  int depth = 0;
  int single_qubit_count = 0;
  std::map<Stage, StageCounts> stages;
};

struct ReportOptions {
  bool merge_single_qubit = true;
  /// Loader gates are left out of the counts unless this is set.
  bool include_loader = false;
};

/// Depth of a gate list with unit durations.
int circuit_depth(const GateCircuit& circuit);

ResourceReport report(const GateCircuit& circuit, const ReportOptions& options = {});

struct SweepRow {
  int n = 0;
  std::string backend;
  int cnot = 0;
  int depth = 0;
  int single_qubit = 0;
};

/// One report row per n.
std::vector<SweepRow> scaling_sweep(const std::function<GateCircuit(int)>& builder,
                                    const std::vector<int>& n_values, const std::string& backend,
                                    const ReportOptions& options = {});

/// `n,backend,cnot,depth,single_qubit` with a header line.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Least-squares fit y = a n + b; returns {a, b, r_squared}.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cpqc::transpile
