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

#include "cpqc/transpile/report.hpp"

#include <algorithm>

#include "cpqc/common/errors.hpp"
#include "cpqc/common/parallel.hpp"

namespace cpqc::transpile {

int circuit_depth(const GateCircuit& circuit) {
  std::vector<int> ready(static_cast<std::size_t>(circuit.num_qubits), 0);
  int depth = 0;
  for (const StagedGate& sg : circuit.gates) {
    int start = ready[static_cast<std::size_t>(sg.gate.target)];
    for (int c : sg.gate.controls) start = std::max(start, ready[static_cast<std::size_t>(c)]);
    const int end = start + 1;
    ready[static_cast<std::size_t>(sg.gate.target)] = end;
    for (int c : sg.gate.controls) ready[static_cast<std::size_t>(c)] = end;
    depth = std::max(depth, end);
  }
  return depth;
}

ResourceReport report(const GateCircuit& circuit, const ReportOptions& options) {
  GateCircuit input;
  input.num_qubits = circuit.num_qubits;
  for (const StagedGate& sg : circuit.gates) {
    if (options.include_loader || sg.stage != Stage::Loader) input.gates.push_back(sg);
  }
  const GateCircuit basis = decompose(input, {options.merge_single_qubit});
  ResourceReport r;
  for (const StagedGate& sg : basis.gates) {
    auto& s = r.stages[sg.stage];
    if (sg.gate.is_controlled()) {
      ++r.cnot_count;
      ++s.cnot;
    } else {
      ++r.single_qubit_count;
      ++s.single_qubit;
    }
  }
  r.depth = circuit_depth(basis);
  return r;
}

std::vector<SweepRow> scaling_sweep(const std::function<GateCircuit(int)>& builder,
                                    const std::vector<int>& n_values, const std::string& backend,
                                    const ReportOptions& options) {
  std::vector<SweepRow> rows(n_values.size());
  parallel_for(n_values.size(), [&](std::size_t i) {
    const ResourceReport r = report(builder(n_values[i]), options);
    rows[i] = SweepRow{n_values[i], backend, r.cnot_count, r.depth, r.single_qubit_count};
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "n,backend,cnot,depth,single_qubit\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.n) + "," + r.backend + "," + std::to_string(r.cnot) + "," +
           std::to_string(r.depth) + "," + std::to_string(r.single_qubit) + "\n";
  }
  return out;
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("fit_linear: need at least two matching points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit f;
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw InvalidArgument("fit_linear: x values are all equal");
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += e * e;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  f.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

}  // namespace cpqc::transpile
