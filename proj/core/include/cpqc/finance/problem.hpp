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
#include <span>
#include <string_view>
#include <vector>

#include "cpqc/cond/layout.hpp"
#include "cpqc/finance/market.hpp"
#include "cpqc/train/model.hpp"

namespace cpqc::finance {

enum class PayoffKind { Call, Put, BasketFixed, BasketVariable };

std::string_view payoff_kind_name(PayoffKind kind);

struct PayoffSpec {
  PayoffKind kind = PayoffKind::Call;
  double strike = 100.0;
  /// Basket weights, nonnegative and summing to 1. For BasketVariable the
  /// weights are (1 - w1, w1) with w1 a model input, so this stays empty.
  std::vector<double> weights;

  /// Number of underlyings.
  int underlyings() const;
  void validate() const;
};

/// max(+-(S - K), 0) or max(w.S - K, 0). Throws InvalidArgument on a
/// dimension mismatch.
double payoff(const PayoffSpec& spec, std::span<const double> prices);
/// Variable-weight basket payoff with weights (1 - w1, w1).
double payoff(const PayoffSpec& spec, std::span<const double> prices, double w1);

/// Register holding the variable weight: 2^qubits values j / 2^qubits.
cond::Register weight_register(int qubits = 3);

/// Control registers for `spec`: one per underlying grid, plus the weight
/// register for BasketVariable.
cond::ControlLayout finance_layout(const PayoffSpec& spec, const std::vector<PriceGrid>& grids,
                                   int target_size, int weight_qubits = 3);

/// Training set on the full grid together with the prices behind each row.
struct FinanceProblem {
  train::TrainingProblem problem;
  /// Raw payoffs, same order as problem.labels.
  std::vector<double> payoffs;
  /// Per-row underlying prices.
  std::vector<std::vector<double>> prices;
};

/// Features are grid angles (and w1 for BasketVariable); labels are payoffs
/// mapped from [0, f_max] onto [-1, 1]. Rows enumerate the joint grid with
/// the first register most significant, weight last.
FinanceProblem build_training_problem(const PayoffSpec& spec, const std::vector<PriceGrid>& grids,
                                      int weight_qubits = 3);

}  // namespace cpqc::finance
