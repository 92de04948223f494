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
#include <vector>

#include "cpqc/cond/layout.hpp"

namespace cpqc::finance {

enum class DistributionFamily { Lognormal, Uniform, Custom };

/// Risk-neutral model of one underlying.
struct MarketModel {
  double spot = 100.0;
  double volatility = 0.2;
  double rate = 0.05;
  double maturity = 1.0;
  DistributionFamily family = DistributionFamily::Lognormal;
  /// Probabilities for the Custom family, one per grid point.
  std::vector<double> custom;

  void validate() const;
  /// E[S_T] = S0 e^{rT}.
  double forward() const;
  /// e^{-rT}.
  double discount() const;
};

/// How grid indices map to encoding angles.
enum class GridConvention {
  /// x_k = pi k / (2^n - 1), spanning [0, pi].
  HalfTurn,
  /// x_k = 2 pi k / 2^n.
  Dyadic,
};

/// Uniform price grid S_i = s_min + i (s_max - s_min) / (2^n - 1) with its
/// angle map.
struct PriceGrid {
  double s_min = 0.0;
  double s_max = 0.0;
  int qubits = 3;
  GridConvention convention = GridConvention::HalfTurn;

  /// [0, 2 S0 e^{rT}] with `qubits` qubits.
  static PriceGrid standard(const MarketModel& market, int qubits,
                            GridConvention convention = GridConvention::HalfTurn);

  void validate() const;
  std::uint64_t size() const { return std::uint64_t{1} << qubits; }
  double spacing() const;
  double price(std::uint64_t index) const;
  double angle(std::uint64_t index) const;
  cond::Register control_register() const;
};

/// Probabilities over the grid: lognormal mass binned around each grid
/// point (cells bounded by midpoints) and renormalised; uniform; or the
/// custom vector. Throws InvalidArgument when no mass lands on the grid.
std::vector<double> discretize(const MarketModel& market, const PriceGrid& grid);

double normal_cdf(double x);
double black_scholes_call(double spot, double strike, double rate, double volatility,
                          double maturity);
double black_scholes_put(double spot, double strike, double rate, double volatility,
                         double maturity);

}  // namespace cpqc::finance
