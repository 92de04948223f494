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

#include "cpqc/search/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cpqc/common/errors.hpp"
#include "cpqc/common/parallel.hpp"
#include "cpqc/ir/text_format.hpp"

namespace cpqc::search {

void GeneticConfig::validate() const {
  if (generations < 1) throw InvalidArgument("search.generations must be >= 1");
  if (population < 1) throw InvalidArgument("search.population must be >= 1");
  search.validate();
}

std::vector<double> selection_weights(const std::vector<double>& costs) {
  if (costs.empty()) throw InvalidArgument("selection_weights: no costs");
  std::size_t zeros = 0;
  for (double c : costs) {
    if (!std::isfinite(c) || c < 0.0) throw InvalidArgument("selection_weights: bad cost");
    zeros += c == 0.0;
  }
  std::vector<double> w(costs.size(), 0.0);
  if (zeros > 0) {
    for (std::size_t j = 0; j < costs.size(); ++j) {
      if (costs[j] == 0.0) w[j] = 1.0 / static_cast<double>(zeros);
    }
    return w;
  }
  double total = 0.0;
  for (double c : costs) total += 1.0 / (c * c);
  for (std::size_t j = 0; j < costs.size(); ++j) w[j] = 1.0 / (costs[j] * costs[j] * total);
  return w;
}

GeneticResult genetic_learn(const std::vector<Member>& initial,
                            const train::TrainingProblem& problem, const BlockPool& pool,
                            const GeneticConfig& config) {
  config.validate();
  if (initial.empty()) throw InvalidArgument("genetic_learn: empty initial population");
  const auto np = static_cast<std::size_t>(config.population);
  std::vector<Member> population(np);
  std::vector<int> parents(np, -1);
  for (std::size_t j = 0; j < np; ++j) population[j] = initial[j % initial.size()];

  GeneticResult result;
  Rng selector(mix_seed(config.seed));
  for (int g = 1; g <= config.generations; ++g) {
    std::vector<SearchResult> runs(np);
    parallel_for(np, [&](std::size_t j) {
      SearchConfig sc = config.search;
      sc.seed = child_seed(config.seed, static_cast<std::uint64_t>(g), j);
      runs[j] = structure_learn(population[j].circuit, population[j].theta, problem, pool, sc);
    });
    std::vector<double> costs(np);
    for (std::size_t j = 0; j < np; ++j) {
      costs[j] = runs[j].cost;
      result.lineage.push_back({g, static_cast<int>(j), runs[j].cost, parents[j],
                                runs[j].accepted_mutations});
    }
    if (g == 1) result.best_initial_cost = *std::min_element(costs.begin(), costs.end());

    const auto w = selection_weights(costs);
    std::vector<Member> next(np);
    for (std::size_t j = 0; j < np; ++j) {
      const std::size_t pick = selector.categorical(w);
      next[j] = Member{runs[pick].circuit, runs[pick].theta, runs[pick].cost};
      parents[j] = static_cast<int>(pick);
    }
    population = std::move(next);
  }
  const auto best = std::min_element(population.begin(), population.end(),
                                     [](const Member& a, const Member& b) { return a.cost < b.cost; });
  result.best = *best;
  return result;
}

std::string lineage_csv(const std::vector<LineageRow>& rows) {
  std::string out = "generation,member,cost,parent,accepted_mutations\n";
  for (const LineageRow& r : rows) {
    out += std::to_string(r.generation) + "," + std::to_string(r.member) + "," +
           ir::format_double(r.cost) + "," + std::to_string(r.parent) + "," +
           std::to_string(r.accepted_mutations) + "\n";
  }
  return out;
}

}  // namespace cpqc::search
