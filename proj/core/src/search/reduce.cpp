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

#include "cpqc/search/reduce.hpp"

#include <numeric>

#include "cpqc/train/training.hpp"

namespace cpqc::search {
namespace {

// Qubits connected to a measured qubit through two-qubit blocks, skipping
// the block at `skip` when set.
std::vector<bool> measured_component(const ir::Circuit& circuit, const ir::BlockRef* skip) {
  const auto n = static_cast<std::size_t>(circuit.num_qubits);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int q) {
    while (parent[static_cast<std::size_t>(q)] != q) {
      q = parent[static_cast<std::size_t>(q)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(q)])];
    }
    return q;
  };
  for (const ir::BlockRef& ref : circuit.block_refs()) {
    if (skip && ref == *skip) continue;
    const auto qubits = ir::block_qubits(circuit.at(ref));
    for (std::size_t i = 1; i < qubits.size(); ++i) {
      parent[static_cast<std::size_t>(find(qubits[i]))] = find(qubits[0]);
    }
  }
  std::vector<bool> roots(n, false);
  for (int q : circuit.measured) roots[static_cast<std::size_t>(find(q))] = true;
  std::vector<bool> out(n);
  for (std::size_t q = 0; q < n; ++q) out[q] = roots[static_cast<std::size_t>(find(static_cast<int>(q)))];
  return out;
}

}  // namespace

bool is_protected(const ir::Circuit& circuit, ir::BlockRef ref) {
  const ir::Block& block = circuit.at(ref);
  const auto with = measured_component(circuit, nullptr);
  if (ir::is_two_qubit(block)) {
    const auto without = measured_component(circuit, &ref);
    if (with != without) return true;
  }
  if (const auto* p = std::get_if<ir::ParamBlock>(&block)) {
    if (!with[static_cast<std::size_t>(p->target)]) return false;
    int count = 0;
    for (const ir::BlockRef& other : circuit.block_refs()) {
      const auto* q = std::get_if<ir::ParamBlock>(&circuit.at(other));
      count += q && q->target == p->target;
    }
    return count <= 1;
  }
  return false;
}

ReduceResult reduce(const ir::Circuit& circuit, const std::vector<double>& theta,
                    const train::TrainingProblem& problem, double rho_max, bool protect) {
  ReduceResult r{circuit, theta, train::cost(circuit, theta, problem), 0};
  const double entry = r.cost;
  const auto refs = circuit.block_refs();
  for (auto it = refs.rbegin(); it != refs.rend(); ++it) {
    if (protect && is_protected(r.circuit, *it)) continue;
    ir::Circuit trial = r.circuit;
    std::vector<double> trial_theta = r.theta;
    ir::remove_block(trial, trial_theta, *it);
    const double c = train::cost(trial, trial_theta, problem);
    // Removals that leave the cost unchanged up to rounding always go.
    if (c <= r.cost + 1e-12 * (1.0 + r.cost) || c - entry < rho_max * entry) {
      r.circuit = std::move(trial);
      r.theta = std::move(trial_theta);
      r.cost = c;
      ++r.removed;
    }
  }
  return r;
}

}  // namespace cpqc::search
