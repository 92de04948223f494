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

#include "cpqc/finance/market.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::finance {

void MarketModel::validate() const {
  if (!(spot > 0.0) || !std::isfinite(spot)) throw InvalidArgument("market.spot must be > 0");
  if (!(volatility > 0.0) || !std::isfinite(volatility)) {
    throw InvalidArgument("market.volatility must be > 0");
  }
  if (!(maturity > 0.0) || !std::isfinite(maturity)) {
    throw InvalidArgument("market.maturity must be > 0");
  }
  if (!std::isfinite(rate)) throw InvalidArgument("market.rate must be finite");
}

double MarketModel::forward() const { return spot * std::exp(rate * maturity); }
double MarketModel::discount() const { return std::exp(-rate * maturity); }

PriceGrid PriceGrid::standard(const MarketModel& market, int qubits, GridConvention convention) {
  market.validate();
  PriceGrid g{0.0, 2.0 * market.forward(), qubits, convention};
  g.validate();
  return g;
}

void PriceGrid::validate() const {
  if (qubits < 1 || qubits > 24) throw InvalidArgument("grid.qubits must be in [1, 24]");
  if (!std::isfinite(s_min) || !std::isfinite(s_max) || !(s_max > s_min)) {
    throw InvalidArgument("grid range is degenerate");
  }
}

double PriceGrid::spacing() const {
  return (s_max - s_min) / (static_cast<double>(size()) - 1.0);
}

double PriceGrid::price(std::uint64_t index) const {
  if (index >= size()) throw InvalidArgument("grid index out of range");
  return s_min + spacing() * static_cast<double>(index);
}

cond::Register PriceGrid::control_register() const {
  return {qubits, convention == GridConvention::HalfTurn ? cond::half_turn_step(qubits)
                                                         : cond::dyadic_step(qubits)};
}

double PriceGrid::angle(std::uint64_t index) const {
  if (index >= size()) throw InvalidArgument("grid index out of range");
  return control_register().step * static_cast<double>(index);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

std::vector<double> discretize(const MarketModel& market, const PriceGrid& grid) {
  market.validate();
  grid.validate();
  const std::uint64_t n = grid.size();
  std::vector<double> p(n, 0.0);
  switch (market.family) {
    case DistributionFamily::Uniform:
      p.assign(n, 1.0 / static_cast<double>(n));
      return p;
    case DistributionFamily::Custom: {
      if (market.custom.size() != n) {
        throw InvalidArgument("custom distribution has " + std::to_string(market.custom.size()) +
                              " entries, grid has " + std::to_string(n));
      }
      double total = 0.0;
      for (double v : market.custom) {
        if (!std::isfinite(v) || v < 0.0) throw InvalidArgument("custom distribution entry < 0");
        total += v;
      }
      if (!(total > 0.0)) throw InvalidArgument("custom distribution has no mass");
      for (std::uint64_t i = 0; i < n; ++i) p[i] = market.custom[i] / total;
      return p;
    }
    case DistributionFamily::Lognormal: break;
  }
  const double sd = market.volatility * std::sqrt(market.maturity);
  const double mu = std::log(market.spot) +
                    (market.rate - 0.5 * market.volatility * market.volatility) * market.maturity;
  const auto cdf = [&](double s) { return s <= 0.0 ? 0.0 : normal_cdf((std::log(s) - mu) / sd); };
  const double h = grid.spacing();
  double total = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double centre = grid.price(i);
    p[i] = cdf(centre + 0.5 * h) - cdf(centre - 0.5 * h);
    total += p[i];
  }
  if (!(total > 0.0)) throw InvalidArgument("lognormal mass falls outside the grid");
  for (double& v : p) v /= total;
  return p;
}

double black_scholes_call(double spot, double strike, double rate, double volatility,
                          double maturity) {
  const double sd = volatility * std::sqrt(maturity);
  const double d1 = (std::log(spot / strike) + (rate + 0.5 * volatility * volatility) * maturity) / sd;
  const double d2 = d1 - sd;
  return spot * normal_cdf(d1) - strike * std::exp(-rate * maturity) * normal_cdf(d2);
}

double black_scholes_put(double spot, double strike, double rate, double volatility,
                         double maturity) {
  return black_scholes_call(spot, strike, rate, volatility, maturity) - spot +
         strike * std::exp(-rate * maturity);
}

}  // namespace cpqc::finance
