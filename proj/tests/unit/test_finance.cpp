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
#include "cpqc/finance/arithmetic.hpp"
#include "cpqc/finance/market.hpp"
#include "cpqc/finance/pricing.hpp"
#include "cpqc/finance/problem.hpp"

namespace cpqc {
namespace {

using namespace finance;

// Bit-level simulation of X-type gates; rotations are skipped.
std::vector<bool> run_classical(const transpile::GateCircuit& c, std::vector<bool> bits) {
  for (const auto& sg : c.gates) {
    const auto& g = sg.gate;
    if (g.kind != sim::GateKind::X) continue;
    bool on = true;
    for (int q : g.controls) on = on && bits[static_cast<std::size_t>(q)];
    if (on) bits[static_cast<std::size_t>(g.target)] = !bits[static_cast<std::size_t>(g.target)];
  }
  return bits;
}

double lognormal_call_integral(double s, double k, double r, double v, double t) {
  // Simpson on log S_T with 20001 nodes over +-10 standard deviations.
  const double mu = std::log(s) + (r - 0.5 * v * v) * t;
  const double sd = v * std::sqrt(t);
  const int n = 20000;
  const double a = mu - 10 * sd, b = mu + 10 * sd, h = (b - a) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double z = a + i * h;
    const double dens = std::exp(-0.5 * std::pow((z - mu) / sd, 2)) / (sd * std::sqrt(2 * std::numbers::pi));
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    sum += w * dens * std::max(std::exp(z) - k, 0.0);
  }
  return std::exp(-r * t) * sum * h / 3.0;
}

TEST(Payoff, WorkedExamples) {
  const PayoffSpec call{PayoffKind::Call, 100.0, {}};
  EXPECT_DOUBLE_EQ(payoff(call, std::vector<double>{120.0}), 20.0);
  EXPECT_DOUBLE_EQ(payoff(call, std::vector<double>{80.0}), 0.0);
  const PayoffSpec put{PayoffKind::Put, 100.0, {}};
  EXPECT_DOUBLE_EQ(payoff(put, std::vector<double>{80.0}), 20.0);
  const PayoffSpec basket{PayoffKind::BasketFixed, 100.0, {2.0 / 3.0, 1.0 / 3.0}};
  EXPECT_NEAR(payoff(basket, std::vector<double>{120.0, 90.0}), 10.0, 1e-12);
  const PayoffSpec variable{PayoffKind::BasketVariable, 100.0, {}};
  EXPECT_NEAR(payoff(variable, std::vector<double>{120.0, 90.0}, 0.25), 12.5, 1e-12);
}

TEST(Payoff, Validation) {
  EXPECT_THROW((PayoffSpec{PayoffKind::BasketFixed, 100.0, {0.5, 0.6}}).validate(), InvalidArgument);
  EXPECT_THROW((PayoffSpec{PayoffKind::BasketFixed, 100.0, {1.0}}).validate(), InvalidArgument);
  EXPECT_THROW((PayoffSpec{PayoffKind::Call, 100.0, {1.0}}).validate(), InvalidArgument);
  EXPECT_NO_THROW((PayoffSpec{PayoffKind::BasketFixed, 100.0, {0.25, 0.75}}).validate());
}

TEST(Market, UniformAndPointMass) {
  MarketModel m;
  m.family = DistributionFamily::Uniform;
  for (double p : discretize(m, PriceGrid::standard(m, 3))) EXPECT_DOUBLE_EQ(p, 0.125);

  MarketModel sharp;
  sharp.volatility = 1e-6;
  sharp.rate = 0.0;
  const auto p = discretize(sharp, PriceGrid{0.0, 140.0, 3, GridConvention::HalfTurn});
  EXPECT_NEAR(p[5], 1.0, 1e-9);
}

TEST(Market, DiscretizedMeanMatchesForward) {
  const MarketModel m;
  const auto grid = PriceGrid::standard(m, 8);
  const auto p = discretize(m, grid);
  double mean = 0.0, total = 0.0;
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    mean += p[i] * grid.price(i);
    total += p[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_LT(std::abs(mean - m.forward()) / m.forward(), 0.005);
}

TEST(Market, GridAngles) {
  const MarketModel m;
  const auto h = PriceGrid::standard(m, 3);
  EXPECT_NEAR(h.angle(7), std::numbers::pi, 1e-15);
  EXPECT_NEAR(h.price(7), 2.0 * m.forward(), 1e-12);
  const auto d = PriceGrid::standard(m, 3, GridConvention::Dyadic);
  EXPECT_NEAR(d.angle(4), std::numbers::pi, 1e-15);
}

TEST(BlackScholes, AgreesWithNumericIntegration) {
  for (double k : {80.0, 100.0, 130.0}) {
    EXPECT_NEAR(black_scholes_call(100, k, 0.05, 0.2, 1.0),
                lognormal_call_integral(100, k, 0.05, 0.2, 1.0), 1e-6);
  }
  EXPECT_NEAR(black_scholes_call(100, 100, 0.05, 0.2, 1.0), 10.4506, 1e-4);
}

TEST(BlackScholes, ParityAndMonotonicity) {
  for (double k : {70.0, 100.0, 140.0}) {
    const double c = black_scholes_call(100, k, 0.03, 0.3, 2.0);
    const double p = black_scholes_put(100, k, 0.03, 0.3, 2.0);
    EXPECT_NEAR(c - p, 100 - k * std::exp(-0.06), 1e-10);
  }
  EXPECT_GT(black_scholes_call(100, 90, 0.05, 0.2, 1), black_scholes_call(100, 110, 0.05, 0.2, 1));
  EXPECT_LT(black_scholes_call(100, 100, 0.05, 0.1, 1), black_scholes_call(100, 100, 0.05, 0.3, 1));
}

TEST(Pricing, ExactParityOnGrid) {
  const MarketModel m;
  const std::vector<PriceGrid> g{PriceGrid::standard(m, 10)};
  const double c = price_exact({{PayoffKind::Call, 100.0, {}}, g, m}).price;
  const double p = price_exact({{PayoffKind::Put, 100.0, {}}, g, m}).price;
  const auto dist = discretize(m, g[0]);
  double mean = 0.0;
  for (std::uint64_t i = 0; i < g[0].size(); ++i) mean += dist[i] * g[0].price(i);
  EXPECT_NEAR(c - p, m.discount() * (mean - 100.0), 1e-8);
  EXPECT_LT(std::abs(c - black_scholes_call(100, 100, 0.05, 0.2, 1)) / c, 0.01);
}

TEST(Pricing, DegenerateBasketEqualsCall) {
  const MarketModel m;
  const auto g = PriceGrid::standard(m, 5);
  const double call = price_exact({{PayoffKind::Call, 100.0, {}}, {g}, m}).price;
  const double basket = price_exact({{PayoffKind::BasketFixed, 100.0, {1.0, 0.0}}, {g, g}, m}).price;
  EXPECT_NEAR(call, basket, 1e-12);
}

TEST(Pricing, PerfectModelReproducesExactPrice) {
  // Labels on a two-point grid are -1 and +1; X then RX(x) gives -cos(x).
  const MarketModel m;
  const std::vector<PriceGrid> g{PriceGrid::standard(m, 1)};
  const PayoffSpec spec{PayoffKind::Call, 100.0, {}};
  const auto fp = build_training_problem(spec, g);
  ASSERT_EQ(fp.problem.labels, (std::vector<double>{-1.0, 1.0}));
  const TrainedModel model{
      ir::from_blocks(1, 1, 0,
                      {ir::FixedBlock{sim::GateOp::x(0)}, ir::EncodingBlock{0, sim::Axis::X, 0}}),
      {}, fp.problem.scale};
  const PricingTask task{spec, g, m};
  EXPECT_NEAR(max_model_error(task, model), 0.0, 1e-10);
  EXPECT_NEAR(price_cpqc(task, model).price, price_exact(task).price, 1e-8);
}

TEST(Arithmetic, ComparatorExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> value, work;
    for (int i = 0; i < n; ++i) value.push_back(i);
    const int flag = n;
    for (int i = 0; i < n - 1; ++i) work.push_back(n + 1 + i);
    const std::size_t width = static_cast<std::size_t>(2 * n);
    for (std::uint64_t t = 0; t <= (std::uint64_t{1} << n); ++t) {
      transpile::GateCircuit c{static_cast<int>(width), {}};
      c.append(comparator(value, t, flag, work), transpile::Stage::Comparator);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        std::vector<bool> bits(width, false);
        for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (v >> (n - 1 - j)) & 1;
        const auto out = run_classical(c, bits);
        EXPECT_EQ(out[static_cast<std::size_t>(flag)], v >= t) << "n=" << n << " t=" << t << " v=" << v;
        for (int q : work) EXPECT_FALSE(out[static_cast<std::size_t>(q)]);
        for (int j = 0; j < n; ++j) EXPECT_EQ(out[static_cast<std::size_t>(j)], bits[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST(Arithmetic, FlagMarksInTheMoneyStates) {
  const MarketModel m;
  for (auto kind : {PayoffKind::Call, PayoffKind::Put}) {
    for (int n = 2; n <= 5; ++n) {
      const auto grid = PriceGrid::standard(m, n);
      const auto ac = build_arithmetic_circuit({kind, 100.0, {}}, {grid});
      for (std::uint64_t i = 0; i < grid.size(); ++i) {
        std::vector<bool> bits(static_cast<std::size_t>(ac.circuit.num_qubits), false);
        for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = (i >> (n - 1 - j)) & 1;
        const bool itm = kind == PayoffKind::Call ? grid.price(i) > 100.0 : grid.price(i) < 100.0;
        EXPECT_EQ(run_classical(ac.circuit, bits)[static_cast<std::size_t>(ac.flag)], itm);
      }
    }
  }
}

TEST(Arithmetic, BasketSumRegister) {
  const MarketModel m;
  const auto grid = PriceGrid::standard(m, 2);
  const auto ac = build_arithmetic_circuit({PayoffKind::BasketFixed, 100.0, {2.0 / 3, 1.0 / 3}},
                                           {grid, grid}, {0.05, true, {2, 1}, {}});
  ASSERT_GE(ac.value_register.size(), 4u);
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      std::vector<bool> bits(static_cast<std::size_t>(ac.circuit.num_qubits), false);
      for (int j = 0; j < 2; ++j) {
        bits[static_cast<std::size_t>(j)] = (a >> (1 - j)) & 1;
        bits[static_cast<std::size_t>(2 + j)] = (b >> (1 - j)) & 1;
      }
      const auto out = run_classical(ac.circuit, bits);
      std::uint64_t sum = 0;
      for (int q : ac.value_register) sum = 2 * sum + out[static_cast<std::size_t>(q)];
      EXPECT_EQ(sum, 2 * a + b);
      EXPECT_NEAR(ac.value_at(a * 4 + b), (2.0 * grid.price(a) + grid.price(b)) / 3.0, 1e-9);
    }
  }
}

TEST(Arithmetic, StrikeAboveRangeGivesBaseline) {
  const MarketModel m;
  const auto grid = PriceGrid::standard(m, 3);
  const auto ac = build_arithmetic_circuit({PayoffKind::Call, 1000.0, {}}, {grid}, {0.1});
  const auto p = discretize(m, grid);
  EXPECT_NEAR(simulate_payoff_probability(ac, p), 0.5 - 0.1, sin_squared_residual(0.1));
}

TEST(Arithmetic, SimulationMatchesFormula) {
  const MarketModel m;
  for (int n = 3; n <= 6; ++n) {
    const auto grid = PriceGrid::standard(m, n);
    const auto p = discretize(m, grid);
    const auto ac = build_arithmetic_circuit({PayoffKind::Call, 100.0, {}}, {grid}, {0.1});
    EXPECT_LE(std::abs(simulate_payoff_probability(ac, p) - arithmetic_formula(ac, p)),
              sin_squared_residual(0.1));
  }
}

TEST(Arithmetic, PriceWithinLinearisationBand) {
  const MarketModel m;
  const std::vector<PriceGrid> g{PriceGrid::standard(m, 6)};
  for (auto kind : {PayoffKind::Call, PayoffKind::Put}) {
    const PricingTask task{{kind, 100.0, {}}, g, m};
    const auto exact = price_exact(task);
    const auto arith = price_arithmetic(task, {0.05});
    const auto ac = build_arithmetic_circuit(task.spec, g, {0.05});
    const double span = ac.is_put ? ac.strike - ac.x0 : ac.x_max - ac.strike;
    EXPECT_LE(std::abs(arith.price - exact.price), m.discount() * 0.05 * 0.05 * span / 3.0 + 1e-9);
  }
}

TEST(Arithmetic, RejectsUnsupportedInputs) {
  const MarketModel m;
  const auto grid = PriceGrid::standard(m, 3);
  EXPECT_THROW(build_arithmetic_circuit({PayoffKind::BasketFixed, 100.0, {0.3, 0.7}}, {grid, grid},
                                        {0.05, true, {1, 1}, {}}),
               InvalidArgument);
  EXPECT_THROW(build_arithmetic_circuit({PayoffKind::BasketFixed, 100.0, {0.123456789, 0.876543211}},
                                        {grid, grid}),
               InvalidArgument);
  EXPECT_THROW(build_arithmetic_circuit({PayoffKind::BasketVariable, 100.0, {}}, {grid, grid}),
               InvalidArgument);
  EXPECT_THROW(build_arithmetic_circuit({PayoffKind::Call, 100.0, {}}, {grid}, {1.0}),
               InvalidArgument);
}

}  // namespace
}  // namespace cpqc
