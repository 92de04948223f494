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

#include "cpqc/search/structure_learning.hpp"

#include <cmath>
#include <limits>

#include "cpqc/common/errors.hpp"
#include "cpqc/search/reduce.hpp"
#include "cpqc/transpile/report.hpp"

namespace cpqc::search {

void SearchConfig::validate() const {
  if (iterations < 0) throw InvalidArgument("search.iterations must be >= 0");
  if (!(beta > 0.0)) throw InvalidArgument("search.beta must be > 0");
  if (!(rho_max >= 0.0) || !std::isfinite(rho_max)) {
    throw InvalidArgument("search.rho_max must be >= 0");
  }
  if (!(depth_penalty >= 0.0) || !(cnot_penalty >= 0.0)) {
    throw InvalidArgument("search penalties must be >= 0");
  }
  optimizer.validate();
}

double accept_probability(double c_old, double c_new, double beta) {
  if (c_new <= c_old) return 1.0;
  if (c_old <= 0.0 || std::isinf(beta)) return 0.0;
  return std::exp(-beta * (c_new - c_old) / c_old);
}

ir::Circuit initial_circuit(int num_qubits, int num_features) {
  if (num_qubits < 1 || num_features < 0) {
    throw InvalidArgument("initial_circuit: bad qubit or feature count");
  }
  ir::Circuit c;
  c.num_qubits = num_qubits;
  c.num_features = num_features;
  c.measured = {0};
  int slot = 0;
  ir::Layer first, encode, last;
  for (int q = 0; q < num_qubits; ++q) first.blocks.push_back(ir::ParamBlock{sim::Axis::Y, slot++, q, {}});
  for (int k = 0; k < num_features; ++k) {
    encode.blocks.push_back(ir::EncodingBlock{k, sim::Axis::X, k % num_qubits});
  }
  c.layers.push_back(std::move(first));
  if (!encode.blocks.empty()) c.layers.push_back(std::move(encode));
  for (int q = num_qubits - 1; q > 0; --q) {
    c.layers.push_back(ir::Layer{{ir::FixedBlock{sim::GateOp::cnot(q, q - 1)}}});
  }
  for (int q = 0; q < num_qubits; ++q) last.blocks.push_back(ir::ParamBlock{sim::Axis::Y, slot++, q, {}});
  c.layers.push_back(std::move(last));
  c.num_params = slot;
  c.validate();
  return c;
}

double penalized_cost(const ir::Circuit& circuit, const std::vector<double>& theta, double mse,
                      const SearchConfig& config) {
  if (config.depth_penalty == 0.0 && config.cnot_penalty == 0.0) return mse;
  std::vector<double> zeros(static_cast<std::size_t>(circuit.num_features), 0.0);
  const auto r = transpile::report(transpile::from_circuit(circuit, {zeros, theta}));
  return mse + config.depth_penalty * r.depth + config.cnot_penalty * r.cnot_count;
}

SearchResult structure_learn(const ir::Circuit& circuit0, const std::vector<double>& theta0,
                             const train::TrainingProblem& problem, const BlockPool& pool,
                             const SearchConfig& config) {
  config.validate();
  pool.validate(circuit0.num_qubits, circuit0.num_features);
  Rng rng(config.seed);

  const auto fit = [&](const ir::Circuit& c, const std::vector<double>& t) {
    auto r = train::optimize(c, t, problem, config.optimizer);
    if (r.diverged) throw DivergenceError("optimizer diverged during structure learning");
    const double cost = penalized_cost(c, r.theta, r.cost, config);
    return std::pair{std::move(r.theta), cost};
  };

  SearchResult current;
  current.circuit = circuit0;
  std::tie(current.theta, current.cost) = fit(circuit0, theta0);
  SearchResult best = current;

  for (int i = 1; i <= config.iterations; ++i) {
    Mutation m = sample_mutation(current.circuit, current.theta, pool, rng);
    auto [cand_theta, cand_cost] = fit(m.circuit, m.theta);
    const double z = rng.uniform();
    TraceEntry entry{i, false, cand_cost, current.cost};
    if (z <= accept_probability(current.cost, cand_cost, config.beta)) {
      ReduceResult reduced =
          reduce(m.circuit, cand_theta, problem, config.rho_max, config.protect);
      current.circuit = std::move(reduced.circuit);
      std::tie(current.theta, current.cost) = fit(current.circuit, reduced.theta);
      ++current.accepted_mutations;
      entry.accepted = true;
      entry.cost = current.cost;
      if (current.cost < best.cost) {
        best.circuit = current.circuit;
        best.theta = current.theta;
        best.cost = current.cost;
      }
    }
    current.trace.push_back(entry);
  }
  best.trace = std::move(current.trace);
  best.accepted_mutations = current.accepted_mutations;
  return best;
}

}  // namespace cpqc::search
