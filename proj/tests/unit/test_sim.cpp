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
#include "cpqc/sim/observable.hpp"
#include "cpqc/sim/statevector.hpp"
#include "oracle.hpp"

namespace cpqc {
namespace {

using sim::Axis;
using sim::GateOp;

oracle::Vec as_vector(const sim::Statevector& s) {
  oracle::Vec v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

TEST(GateMatrix, RotationsMatchMatrixExponential) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    for (double t : {-2.7, -0.3, 0.0, 0.9, 3.1}) {
      const auto m = sim::rotation_matrix(a, t);
      const oracle::Mat ref = oracle::rotation(a, t);
      for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(m[i] - ref(i / 2, i % 2)), 0.0, 1e-14);
    }
  }
}

TEST(GateMatrix, U3MatchesEulerForm) {
  const GateOp g = GateOp::u3(0, 0.7, -1.1, 2.3);
  const auto m = sim::gate_matrix(g);
  const oracle::Mat ref = oracle::single(g);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(m[i] - ref(i / 2, i % 2)), 0.0, 1e-14);
}

TEST(Statevector, QubitZeroIsMostSignificant) {
  sim::Statevector s(3);
  s.apply(GateOp::x(0));
  EXPECT_NEAR(s.probability(0b100), 1.0, 1e-15);
  EXPECT_NEAR(s.probability_one(0), 1.0, 1e-15);
  EXPECT_NEAR(s.probability_one(2), 0.0, 1e-15);
}

TEST(Statevector, ControlledGateActsOnlyWhenAllControlsAreOne) {
  auto s = sim::Statevector::basis(3, 0b100);
  s.apply(GateOp::toffoli(0, 1, 2));
  EXPECT_NEAR(s.probability(0b100), 1.0, 1e-15);
  s = sim::Statevector::basis(3, 0b110);
  s.apply(GateOp::toffoli(0, 1, 2));
  EXPECT_NEAR(s.probability(0b111), 1.0, 1e-15);
}

TEST(Statevector, RandomGateSequencesMatchDenseUnitary) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(4));
    std::vector<GateOp> gates;
    for (int g = 0; g < 12; ++g) {
      const int t = static_cast<int>(rng.index(n));
      GateOp op = GateOp::rotation(static_cast<Axis>(rng.index(3)), t, 4.0 * rng.uniform() - 2.0);
      if (rng.index(4) == 0) op = GateOp::sx(t);
      if (rng.index(4) == 0) op = GateOp::u3(t, rng.uniform(), rng.uniform(), rng.uniform());
      for (int c = 0; c < n; ++c) {
        if (c != t && rng.index(3) == 0) op.controls.push_back(c);
      }
      gates.push_back(op);
    }
    sim::Statevector s(n);
    for (const auto& g : gates) s.apply(g);
    oracle::Vec e0 = oracle::Vec::Zero(1 << n);
    e0(0) = 1.0;
    const oracle::Vec ref = oracle::unitary(gates, n) * e0;
    EXPECT_LT((as_vector(s) - ref).cwiseAbs().maxCoeff(), 1e-12) << "trial " << trial;
  }
}

TEST(Statevector, RejectsInvalidGates) {
  sim::Statevector s(2);
  EXPECT_THROW(s.apply(GateOp::x(2)), InvalidArgument);
  EXPECT_THROW(s.apply(GateOp::cnot(1, 1)), InvalidArgument);
  EXPECT_THROW(s.apply(GateOp::rotation(Axis::X, 0, NAN)), InvalidArgument);
  EXPECT_THROW(sim::Statevector(0), InvalidArgument);
}

TEST(Statevector, InjectAmplitudesValidatesInput) {
  const std::vector<double> ok{0.25, 0.25, 0.5, 0.0};
  const auto s = sim::inject_amplitudes(ok);
  EXPECT_NEAR(s.probability(2), 0.5, 1e-15);
  EXPECT_THROW(sim::inject_amplitudes(std::vector<double>{0.5, 0.5, 0.5}), InvalidArgument);
  EXPECT_THROW(sim::inject_amplitudes(std::vector<double>{0.5, 0.6}), InvalidArgument);
  EXPECT_THROW(sim::inject_amplitudes(std::vector<double>{1.5, -0.5}), InvalidArgument);
}

TEST(Observable, PauliExpectationsOnKnownStates) {
  sim::Statevector s(2);
  s.apply(GateOp::h(1));
  EXPECT_NEAR(sim::expectation(s, {{{1.0, 1, Axis::X}}}), 1.0, 1e-14);
  EXPECT_NEAR(sim::expectation(s, sim::Observable::z(1)), 0.0, 1e-14);
  EXPECT_NEAR(sim::expectation(s, sim::Observable::z(0)), 1.0, 1e-14);
  s.apply(GateOp::rotation(Axis::X, 0, std::numbers::pi / 2));
  EXPECT_NEAR(sim::expectation(s, {{{1.0, 0, Axis::Y}}}), -1.0, 1e-14);
  EXPECT_NEAR(sim::expectation(s, sim::Observable::mean_z({0, 1})), 0.0, 1e-14);
}

}  // namespace
}  // namespace cpqc
