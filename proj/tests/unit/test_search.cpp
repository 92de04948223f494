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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cpqc/common/errors.hpp"
#include "cpqc/common/rng.hpp"
#include "cpqc/ir/text_format.hpp"
#include "cpqc/train/model.hpp"
#include "cpqc/search/genetic.hpp"
#include "cpqc/search/pool.hpp"
#include "cpqc/search/reduce.hpp"
#include "cpqc/search/structure_learning.hpp"
#include "cpqc/train/training.hpp"

namespace cpqc {
namespace {

using ir::EncodingBlock;
using ir::FixedBlock;
using ir::ParamBlock;
using sim::Axis;

train::TrainingProblem sine_problem() {
  train::TrainingProblem p;
  for (int i = 0; i < 8; ++i) {
    const double x = 2.0 * std::numbers::pi * i / 8.0;
    p.features.push_back({x});
    p.labels.push_back(0.8 * std::sin(x));
  }
  return p;
}

TEST(Acceptance, ProbabilityFormula) {
  EXPECT_DOUBLE_EQ(search::accept_probability(1.0, 0.5, 5.0), 1.0);
  EXPECT_NEAR(search::accept_probability(1.0, 1.2, 5.0), std::exp(-1.0), 1e-12);
  EXPECT_DOUBLE_EQ(search::accept_probability(1.0, 1.0, 5.0), 1.0);
  EXPECT_DOUBLE_EQ(search::accept_probability(0.0, 0.1, 5.0), 0.0);
  EXPECT_DOUBLE_EQ(search::accept_probability(1.0, 1.1, INFINITY), 0.0);
}

TEST(Selection, InverseSquareWeights) {
  const auto w2 = search::selection_weights({1.0, 2.0});
  EXPECT_NEAR(w2[0], 0.8, 1e-15);
  EXPECT_NEAR(w2[1], 0.2, 1e-15);
  const auto w3 = search::selection_weights({1.0, 2.0, 4.0});
  EXPECT_NEAR(w3[0], 16.0 / 21.0, 1e-15);
  EXPECT_NEAR(w3[1], 4.0 / 21.0, 1e-15);
  EXPECT_NEAR(w3[2], 1.0 / 21.0, 1e-15);
  const auto eq = search::selection_weights({0.3, 0.3});
  EXPECT_DOUBLE_EQ(eq[0], 0.5);
  const auto zero = search::selection_weights({0.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(zero[0], 0.5);
  EXPECT_DOUBLE_EQ(zero[1], 0.0);
  EXPECT_THROW(search::selection_weights({}), InvalidArgument);
}

TEST(Mutation, IdentityInsertableBlocksKeepCost) {
  const auto p = sine_problem();
  const ir::Circuit c = search::initial_circuit(2, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.4);
  const double before = train::cost(c, theta, p);
  search::BlockPool pool;
  pool.candidates = {{search::TemplateKind::RotationPair, Axis::Y, 0},
                     {search::TemplateKind::Rotation, Axis::X, 0}};
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto m = search::sample_mutation(c, theta, pool, rng);
    EXPECT_NEAR(train::cost(m.circuit, m.theta, p), before, 1e-12);
  }
}

TEST(Mutation, EncodingOnlyPoolUsesFeatureZero) {
  const ir::Circuit c = search::initial_circuit(2, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.0);
  search::BlockPool pool;
  pool.candidates = {{search::TemplateKind::Encoding, Axis::Z, 0}};
  Rng rng(2);
  const auto m = search::sample_mutation(c, theta, pool, rng);
  const auto& layer = m.circuit.layers[m.position];
  ASSERT_EQ(layer.blocks.size(), 1u);
  EXPECT_EQ(std::get<EncodingBlock>(layer.blocks[0]).feature, 0);
}

TEST(Mutation, SeededDrawsRepeat) {
  const ir::Circuit c = search::initial_circuit(3, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.0);
  const auto pool = search::BlockPool::standard(1);
  Rng a(9), b(9);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(search::sample_mutation(c, theta, pool, a).circuit,
              search::sample_mutation(c, theta, pool, b).circuit);
  }
}

TEST(Reduce, DropsGateOnDetachedUnmeasuredQubit) {
  const auto p = sine_problem();
  const ir::Circuit c = ir::from_blocks(
      2, 1, 2, {EncodingBlock{0, Axis::Y, 0}, ParamBlock{Axis::Y, 0, 0, {}},
                ParamBlock{Axis::X, 1, 1, {}}});
  const std::vector<double> theta{0.2, 0.9};
  const auto r = search::reduce(c, theta, p, 0.0);
  EXPECT_EQ(r.removed, 1);
  EXPECT_EQ(r.circuit.num_params, 1);
  EXPECT_NEAR(r.cost, train::cost(c, theta, p), 1e-14);
}

TEST(Reduce, KeepsContributingGatesAtZeroTolerance) {
  const ir::Circuit c = ir::from_blocks(
      1, 1, 2, {ParamBlock{Axis::X, 0, 0, {}}, EncodingBlock{0, Axis::Y, 0},
                ParamBlock{Axis::Y, 1, 0, {}}});
  const std::vector<double> theta{0.7, 0.5};
  // Labels produced by the circuit itself: every removal raises the cost.
  auto p = sine_problem();
  for (std::size_t i = 0; i < p.size(); ++i) {
    p.labels[i] = train::quantum_model(c, p.features[i], theta);
  }
  const auto r = search::reduce(c, theta, p, 0.0);
  EXPECT_EQ(r.removed, 0);
  EXPECT_EQ(r.circuit, c);
}

TEST(Reduce, RemovesRzBeforeZReadout) {
  const auto p = sine_problem();
  const ir::Circuit c = ir::from_blocks(
      1, 1, 2, {EncodingBlock{0, Axis::Y, 0}, ParamBlock{Axis::Y, 0, 0, {}},
                ParamBlock{Axis::Z, 1, 0, {}}});
  const std::vector<double> theta{0.3, 1.1};
  const double c0 = train::cost(c, theta, p);
  // Brute force: which single removals keep the cost?
  for (const ir::BlockRef ref : c.block_refs()) {
    ir::Circuit copy = c;
    std::vector<double> t = theta;
    ir::remove_block(copy, t, ref);
    const bool harmless = std::abs(train::cost(copy, t, p) - c0) < 1e-14;
    EXPECT_EQ(harmless, ref.layer == 2);
  }
  const auto r = search::reduce(c, theta, p, 0.0);
  EXPECT_EQ(r.removed, 1);
  EXPECT_EQ(r.circuit.layers.size(), 2u);
}

TEST(Reduce, ProtectsLastEntanglerIntoMeasuredComponent) {
  const ir::Circuit c = ir::from_blocks(
      2, 1, 1, {EncodingBlock{0, Axis::Y, 1}, FixedBlock{sim::GateOp::cnot(1, 0)},
                ParamBlock{Axis::Y, 0, 0, {}}});
  EXPECT_TRUE(search::is_protected(c, {1, 0}));
  EXPECT_TRUE(search::is_protected(c, {2, 0}));
}

TEST(StructureLearning, ZeroIterationsReturnsOptimizedStart) {
  const auto p = sine_problem();
  search::SearchConfig cfg;
  cfg.iterations = 0;
  const ir::Circuit c = search::initial_circuit(2, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.1);
  const auto r = search::structure_learn(c, theta, p, search::BlockPool::standard(1), cfg);
  EXPECT_EQ(r.circuit, c);
  const auto opt = train::optimize(c, theta, p, cfg.optimizer);
  EXPECT_NEAR(r.cost, opt.cost, 1e-12);
}

TEST(StructureLearning, GreedyModeNeverAcceptsWorse) {
  const auto p = sine_problem();
  search::SearchConfig cfg;
  cfg.iterations = 6;
  cfg.beta = INFINITY;
  cfg.rho_max = 0.0;
  cfg.seed = 4;
  cfg.optimizer.max_steps = 40;
  const ir::Circuit c = search::initial_circuit(2, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.1);
  const auto r = search::structure_learn(c, theta, p, search::BlockPool::standard(1), cfg);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    EXPECT_LE(r.trace[i].cost, r.trace[i - 1].cost + 1e-12) << "iteration " << i;
  }
}

TEST(StructureLearning, ImprovesOnSineTargetForMostSeeds) {
  const auto p = sine_problem();
  int improved = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    search::SearchConfig cfg;
    cfg.iterations = 20;
    cfg.seed = seed;
    cfg.optimizer.max_steps = 60;
    const ir::Circuit c = search::initial_circuit(2, 1);
    const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.1);
    const double initial = train::cost(c, theta, p);
    const auto r = search::structure_learn(c, theta, p, search::BlockPool::standard(1), cfg);
    improved += r.cost < initial;
  }
  EXPECT_GE(improved, 9);
}

TEST(Genetic, DeterministicAndNeverWorseThanFirstRound) {
  const auto p = sine_problem();
  search::GeneticConfig cfg;
  cfg.generations = 2;
  cfg.population = 3;
  cfg.seed = 12;
  cfg.search.iterations = 3;
  cfg.search.optimizer.max_steps = 30;
  const ir::Circuit c = search::initial_circuit(2, 1);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.1);
  const search::Member m{c, theta, train::cost(c, theta, p)};
  const auto pool = search::BlockPool::standard(1);
  const auto a = search::genetic_learn({m}, p, pool, cfg);
  const auto b = search::genetic_learn({m}, p, pool, cfg);
  EXPECT_EQ(ir::serialize(a.best.circuit, a.best.theta), ir::serialize(b.best.circuit, b.best.theta));
  EXPECT_EQ(search::lineage_csv(a.lineage), search::lineage_csv(b.lineage));
  EXPECT_LE(a.best.cost, a.best_initial_cost);
  EXPECT_EQ(a.lineage.size(), 6u);
}

TEST(Genetic, ConfigValidation) {
  search::GeneticConfig cfg;
  cfg.population = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.search.beta = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

}  // namespace
}  // namespace cpqc
