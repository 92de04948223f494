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

#include "cpqc/search/structure_learning.hpp"

namespace cpqc::search {

struct GeneticConfig {
  int generations = 5;
  int population = 8;
  SearchConfig search;
  std::uint64_t seed = 0;

  void validate() const;
};

struct Member {
  ir::Circuit circuit;
  std::vector<double> theta;
  double cost = 0.0;
};

struct LineageRow {
  int generation = 0;
  int member = 0;
  double cost = 0.0;
  /// Slot of the previous generation this member was selected from, -1
  /// for the initial population.
  int parent = -1;
  int accepted_mutations = 0;
};

struct GeneticResult {
  Member best;
  std::vector<LineageRow> lineage;
  /// Best cost after the first round of structure learning.
  double best_initial_cost = 0.0;
};

/// w_j = (1 / c_j^2) / sum_k (1 / c_k^2). Members with zero cost share all
/// the weight equally.
std::vector<double> selection_weights(const std::vector<double>& costs);

/// Every generation runs structure learning on each member (seeded
/// by child_seed(seed, generation, member)) and resamples n_p members with
/// selection_weights. Returns the lowest-cost member of the last
/// generation. `initial` is cycled to fill the population.
GeneticResult genetic_learn(const std::vector<Member>& initial,
                            const train::TrainingProblem& problem, const BlockPool& pool,
                            const GeneticConfig& config);

/// `generation,member,cost,parent,accepted_mutations`.
std::string lineage_csv(const std::vector<LineageRow>& rows);

}  // namespace cpqc::search
