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
#include "cpqc/cond/conditional.hpp"
#include "cpqc/cond/layout.hpp"
#include "cpqc/cond/loader.hpp"
#include "cpqc/cond/text_format.hpp"
#include "cpqc/ir/fixtures.hpp"
#include "cpqc/ir/text_format.hpp"
#include "cpqc/sim/statevector.hpp"
#include "cpqc/train/model.hpp"
#include "random_circuits.hpp"

namespace cpqc {
namespace {

using cond::ControlLayout;
using cond::ProductDistribution;
using sim::Axis;

constexpr double kPi = std::numbers::pi;

std::vector<sim::GateOp> controlled_rotations(const cond::ConditionalCircuit& cc) {
  std::vector<sim::GateOp> out;
  for (const auto& layer : cc.circuit.layers) {
    for (const auto& b : layer.blocks) {
      if (const auto* f = std::get_if<ir::FixedBlock>(&b)) {
        if (f->gate.is_controlled() && sim::is_rotation(f->gate.kind)) out.push_back(f->gate);
      }
    }
  }
  return out;
}

std::vector<double> binomial(int n) {
  // Binomial(2^n - 1, 1/2) over the grid indices.
  std::vector<double> p(std::size_t{1} << n);
  const double trials = static_cast<double>(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double k = static_cast<double>(i);
    p[i] = std::tgamma(trials + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(trials - k + 1.0));
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return p;
}

TEST(Layout, BasisEncodingOnTenthGrid) {
  const ControlLayout layout{{{3, 0.1}}, 1};
  EXPECT_EQ(cond::basis_encode(0.4, 0, layout), "100");
  EXPECT_EQ(cond::basis_encode(0.0, 0, layout), "000");
  EXPECT_EQ(cond::basis_encode(0.7, 0, layout), "111");
  EXPECT_THROW(cond::grid_index(0.45, 0, layout), InvalidArgument);
  EXPECT_THROW(cond::grid_index(0.8, 0, layout), InvalidArgument);
}

TEST(Layout, ConventionsAndValidation) {
  const auto h = ControlLayout::half_turn({3, 2}, 2);
  EXPECT_NEAR(h.grid_value(0, 7), kPi, 1e-15);
  EXPECT_NEAR(h.grid_value(1, 3), kPi, 1e-15);
  EXPECT_EQ(h.control_qubits(), 5);
  EXPECT_EQ(h.bit_qubit(0, 0), 2);
  EXPECT_EQ(h.bit_qubit(1, 1), 3);
  const auto d = ControlLayout::dyadic({3}, 1);
  EXPECT_NEAR(d.grid_value(0, 1), kPi / 4.0, 1e-15);
  EXPECT_THROW((ControlLayout{{{0, 0.1}}, 1}).validate(), InvalidArgument);
  EXPECT_THROW((ControlLayout{{{3, 1.0}}, 1}).validate(), InvalidArgument);
}

TEST(Efficient, ExampleTwoControlledAngles) {
  const ir::Circuit c = ir::from_blocks(1, 1, 0, {ir::EncodingBlock{0, Axis::Y, 0}});
  const auto cc = cond::make_conditional(c, ControlLayout{{{3, 0.1}}, 1});
  const auto rot = controlled_rotations(cc);
  ASSERT_EQ(rot.size(), 3u);
  const std::vector<double> angles{0.4, 0.2, 0.1};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(rot[i].kind, sim::GateKind::RY);
    EXPECT_EQ(rot[i].controls, std::vector<int>{i});
    EXPECT_EQ(rot[i].target, 3);
    EXPECT_NEAR(rot[i].angle, angles[static_cast<std::size_t>(i)], 1e-15);
  }
}

TEST(Efficient, NoEncodingsMeansNoControls) {
  const ir::Circuit c = ir::from_blocks(2, 0, 1, {ir::ParamBlock{Axis::Y, 0, 1, {}},
                                                  ir::FixedBlock{sim::GateOp::cnot(1, 0)}});
  ir::Circuit with_feature = c;
  with_feature.num_features = 1;
  const auto cc = cond::make_conditional(with_feature, ControlLayout::half_turn({2}, 2));
  EXPECT_EQ(cc.controlled_rotation_count(), 0u);
  const std::vector<double> theta{0.8};
  const auto dist = ProductDistribution::uniform(cc.layout);
  EXPECT_NEAR(cond::conditional_expectation(cc, dist, theta),
              train::quantum_model(c, {}, theta), 1e-12);
}

TEST(Efficient, CallFixtureLadderAngles) {
  const auto f = ir::load_fixture("call_fig3");
  const auto cc = cond::make_conditional(f.circuit, ControlLayout::half_turn({3}, 3));
  const auto rot = controlled_rotations(cc);
  ASSERT_EQ(rot.size() % 3, 0u);
  for (std::size_t i = 0; i < rot.size(); ++i) {
    EXPECT_NEAR(rot[i].angle, kPi * std::ldexp(1.0, 2 - static_cast<int>(i % 3)) / 7.0, 1e-14);
  }
}

TEST(WeightedSum, PointMassReproducesModel) {
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = ControlLayout::half_turn({3}, 3);
  const auto cc = cond::make_conditional(f.circuit, layout);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const auto dist = ProductDistribution::point(layout, {i});
    const std::vector<double> x{layout.grid_value(0, i)};
    EXPECT_NEAR(cond::conditional_expectation(cc, dist, f.theta),
                train::quantum_model(f.circuit, x, f.theta), 1e-12);
  }
}

TEST(WeightedSum, UniformAndBinomialMatchWeightedSums) {
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = ControlLayout::half_turn({3}, 3);
  const auto cc = cond::make_conditional(f.circuit, layout);
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 8; ++i) {
    mean += train::quantum_model(f.circuit, std::vector<double>{layout.grid_value(0, i)}, f.theta) / 8.0;
  }
  EXPECT_NEAR(cond::conditional_expectation(cc, ProductDistribution::uniform(layout), f.theta), mean,
              1e-10);
  const ProductDistribution bin{{binomial(3)}};
  const auto report = cond::verify_proposition(f.circuit, cc, bin, f.theta);
  EXPECT_TRUE(report.pass) << report.delta;
}

TEST(WeightedSum, UnequalRegisters) {
  const auto f = ir::load_fixture("basket_figA2");
  Rng rng(8);
  const auto layout = ControlLayout::half_turn({3, 2}, 4);
  const ProductDistribution dist{{testing::random_distribution(rng, 8),
                                  testing::random_distribution(rng, 4)}};
  const auto r = cond::verify_proposition(f.circuit, layout, dist, f.theta);
  EXPECT_TRUE(r.pass) << r.delta;
}

TEST(WeightedSum, CorruptedAngleFails) {
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = ControlLayout::half_turn({3}, 3);
  auto cc = cond::make_conditional(f.circuit, layout);
  for (auto& layer : cc.circuit.layers) {
    bool done = false;
    for (auto& b : layer.blocks) {
      if (auto* fb = std::get_if<ir::FixedBlock>(&b); fb && fb->gate.is_controlled() && sim::is_rotation(fb->gate.kind)) {
        fb->gate.angle /= 2.0;
        done = true;
        break;
      }
    }
    if (done) break;
  }
  const ProductDistribution bin{{binomial(3)}};
  const std::vector<double> theta{0.3, -1.2, 0.8, 2.0, -0.4, 1.1, 0.6, -2.2};
  EXPECT_FALSE(cond::verify_proposition(f.circuit, cc, bin, theta).pass);
}

TEST(WeightedSum, RandomCircuitsBothConventions) {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 1 + static_cast<int>(rng.index(2));
    const ir::Circuit c = testing::random_circuit(rng, 2, k, 8, true);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(1 + static_cast<int>(rng.index(3)));
    const auto layout =
        trial % 2 ? ControlLayout::half_turn(sizes, 2) : ControlLayout::dyadic(sizes, 2);
    ProductDistribution dist;
    for (int i = 0; i < k; ++i) {
      dist.registers.push_back(testing::random_distribution(rng, layout.grid_size(i)));
    }
    const auto theta = testing::random_angles(rng, c.num_params);
    const auto r = cond::verify_proposition(c, layout, dist, theta);
    EXPECT_TRUE(r.pass) << "trial " << trial << " delta " << r.delta;
  }
}

TEST(Trivial, SinglePatternGivesSingleControlledGate) {
  const ir::Circuit c = ir::from_blocks(1, 1, 0, {ir::EncodingBlock{0, Axis::X, 0}});
  const ControlLayout layout{{{1, 1.0}}, 1};
  const auto cc = cond::trivial_conditional(c, {{{1, 0.9}}}, layout);
  const auto rot = controlled_rotations(cc);
  ASSERT_EQ(rot.size(), 1u);
  EXPECT_EQ(rot[0].controls, std::vector<int>{0});
  EXPECT_NEAR(rot[0].angle, 0.9, 1e-15);
  EXPECT_EQ(cc.circuit.block_count(), 1u);
}

TEST(Trivial, AgreesWithEfficientAndGrowsExponentially) {
  const auto f = ir::load_fixture("call_fig3");
  for (int n = 1; n <= 5; ++n) {
    const auto layout = ControlLayout::half_turn({n}, 3);
    const auto eff = cond::make_conditional(f.circuit, layout);
    const auto triv = cond::trivial_conditional(f.circuit, cond::grid_data(layout), layout);
    const ProductDistribution dist{{binomial(n)}};
    EXPECT_NEAR(cond::conditional_expectation(eff, dist, f.theta),
                cond::conditional_expectation(triv, dist, f.theta), 1e-10);
    EXPECT_EQ(triv.controlled_rotation_count(), f.circuit.encoding_count() << n);
    EXPECT_EQ(eff.controlled_rotation_count(), f.circuit.encoding_count() * n);
  }
}

TEST(Trivial, RejectsDuplicatePatterns) {
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = ControlLayout::half_turn({2}, 3);
  EXPECT_THROW(cond::trivial_conditional(f.circuit, {{{1, 0.1}, {1, 0.2}}}, layout),
               InvalidArgument);
}

TEST(Distribution, Validation) {
  const auto layout = ControlLayout::half_turn({2}, 1);
  EXPECT_THROW((ProductDistribution{{{0.5, 0.5}}}).validate(layout), InvalidArgument);
  EXPECT_THROW((ProductDistribution{{{0.5, 0.5, 0.5, -0.5}}}).validate(layout), InvalidArgument);
  EXPECT_THROW((ProductDistribution{{{0.3, 0.3, 0.3, 0.3}}}).validate(layout), InvalidArgument);
}

TEST(Loader, PreparesRequestedAmplitudes) {
  const auto prepare = [](const std::vector<double>& p) {
    const int n = static_cast<int>(std::log2(p.size()));
    std::vector<int> qubits;
    for (int i = 0; i < n; ++i) qubits.push_back(i);
    sim::Statevector s(n);
    for (const auto& g : cond::state_preparation(p, qubits)) s.apply(g);
    return s;
  };
  const auto point = prepare({1, 0, 0, 0});
  EXPECT_NEAR(point.probability(0), 1.0, 1e-12);
  const auto uniform = prepare(std::vector<double>(8, 0.125));
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(uniform[i] - std::sqrt(0.125)), 0.0, 1e-12);
  }
  const auto p = binomial(3);
  const auto s = prepare(p);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(s.probability(i), p[i], 1e-12);
}

TEST(Loader, UniformIsHadamardLayer) {
  const std::vector<int> qubits{0, 1, 2};
  const auto gates = cond::state_preparation(std::vector<double>(8, 0.125), qubits);
  ASSERT_EQ(gates.size(), 3u);
  for (const auto& g : gates) EXPECT_EQ(g.kind, sim::GateKind::H);
}

TEST(TextFormat, ConditionalRoundTrip) {
  const auto f = ir::load_fixture("basket_figA2");
  const auto cc = cond::make_conditional(f.circuit, ControlLayout::half_turn({2, 3}, 4));
  const std::string text = cond::serialize_conditional(cc, f.theta);
  const auto doc = cond::deserialize_conditional(text);
  EXPECT_EQ(doc.conditional.layout, cc.layout);
  EXPECT_EQ(doc.conditional.circuit, cc.circuit);
  EXPECT_EQ(doc.theta, f.theta);
  EXPECT_THROW(cond::deserialize_conditional(ir::serialize(f.circuit, f.theta)), ParseError);
}

}  // namespace
}  // namespace cpqc
