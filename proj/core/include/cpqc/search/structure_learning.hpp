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

#include <cstdint>
#include <string>
#include <vector>

#include "cpqc/search/pool.hpp"
#include "cpqc/train/training.hpp"

namespace cpqc::search {

struct SearchConfig {
  int iterations = 10;
  /// Acceptance temperature; +infinity accepts improvements only.
  double beta = 5.0;
  double rho_max = 0.01;
  bool protect = true;
  std::uint64_t seed = 0;
  train::OptimizerConfig optimizer;
  /// Optional hardware penalty lambda_d * depth + lambda_c * CNOTs added to
  /// the cost seen by acceptance and selection.
  double depth_penalty = 0.0;
  double cnot_penalty = 0.0;

  void validate() const;
};

/// g(c_old, c_new) = 1 if c_new <= c_old, else exp(-beta (c_new - c_old) / c_old).
/// c_old = 0 with c_new > 0 gives 0.
double accept_probability(double c_old, double c_new, double beta);

/// Starting ansatz: RY on every qubit, one RX encoding per feature on
/// qubit k mod n, a CNOT ladder into qubit 0 and a final RY layer.
ir::Circuit initial_circuit(int num_qubits, int num_features);

struct TraceEntry {
  int iteration = 0;
  bool accepted = false;
  /// Cost of the optimized candidate.
  double candidate_cost = 0.0;
  /// Cost of the current circuit after the step.
  double cost = 0.0;
};

struct SearchResult {
  ir::Circuit circuit;
  std::vector<double> theta;
  double cost = 0.0;
  std::vector<TraceEntry> trace;
  int accepted_mutations = 0;
};

/// Cost with the configured hardware penalty.
double penalized_cost(const ir::Circuit& circuit, const std::vector<double>& theta, double mse,
                      const SearchConfig& config);

/// Mutate, optimize, accept with probability g, reduce and re-optimize,
/// n_i times. Returns the best circuit seen.
SearchResult structure_learn(const ir::Circuit& circuit0, const std::vector<double>& theta0,
                             const train::TrainingProblem& problem, const BlockPool& pool,
                             const SearchConfig& config);

}  // namespace cpqc::search
