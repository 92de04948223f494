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

#include <string>
#include <string_view>
#include <vector>

#include "cpqc/finance/arithmetic.hpp"
#include "cpqc/finance/market.hpp"
#include "cpqc/finance/problem.hpp"
#include "cpqc/ir/circuit.hpp"
#include "cpqc/train/model.hpp"

namespace cpqc::finance {

enum class Backend { Exact, Cpqc, Arithmetic };

std::string_view backend_name(Backend backend);

/// One option on discretised underlyings.
struct PricingTask {
  PayoffSpec spec;
  std::vector<PriceGrid> grids;
  MarketModel market;
  /// w1 for a variable-weight basket; must sit on the weight grid.
  double weight = 0.5;
  int weight_qubits = 3;

  void validate() const;
  /// Per-register probabilities of the underlyings.
  std::vector<std::vector<double>> distributions() const;
};

/// A trained PQC with the label scale used to train it.
struct TrainedModel {
  ir::Circuit circuit;
  std::vector<double> theta;
  train::LabelScale scale;
};

struct PriceResult {
  Backend backend = Backend::Exact;
  /// Discounted price in currency units.
  double price = 0.0;
  /// Backend output before un-scaling: <M> for cpqc, P(|1>) for arithmetic,
  /// the expected payoff for exact.
  double raw = 0.0;
  /// Undiscounted expected payoff.
  double expected_payoff = 0.0;
  double discount = 1.0;
  /// Human-readable un-scaling steps.
  std::string trace;
};

/// sum_i p_i f(x_i) e^{-rT} on the grid.
PriceResult price_exact(const PricingTask& task);
/// Reads the expectation of the CPQC built from the model and un-scales
/// it. Throws InvalidArgument when the model does not fit the task.
PriceResult price_cpqc(const PricingTask& task, const TrainedModel& model);
/// Simulates the arithmetic baseline and inverts its linear payoff encoding.
PriceResult price_arithmetic(const PricingTask& task, const ArithmeticOptions& options = {});

/// Largest |model(x_i) - f(x_i)| over the grid, in currency units.
double max_model_error(const PricingTask& task, const TrainedModel& model);

}  // namespace cpqc::finance
