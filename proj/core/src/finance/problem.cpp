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

#include "cpqc/finance/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::finance {

std::string_view payoff_kind_name(PayoffKind kind) {
  switch (kind) {
    case PayoffKind::Call: return "call";
    case PayoffKind::Put: return "put";
    case PayoffKind::BasketFixed: return "basket_fixed";
    case PayoffKind::BasketVariable: return "basket_variable";
  }
  return "call";
}

int PayoffSpec::underlyings() const {
  switch (kind) {
    case PayoffKind::Call:
    case PayoffKind::Put: return 1;
    case PayoffKind::BasketFixed: return static_cast<int>(weights.size());
    case PayoffKind::BasketVariable: return 2;
  }
  return 1;
}

void PayoffSpec::validate() const {
  if (!std::isfinite(strike)) throw InvalidArgument("payoff.strike must be finite");
  if (kind == PayoffKind::BasketFixed) {
    if (weights.size() < 2) throw InvalidArgument("payoff.weights: a basket needs >= 2 weights");
    double total = 0.0;
    for (double w : weights) {
      if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
        throw InvalidArgument("payoff.weights must lie in [0, 1]");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvalidArgument("payoff.weights must sum to 1");
  } else if (!weights.empty()) {
    throw InvalidArgument("payoff.weights only apply to basket_fixed");
  }
}

double payoff(const PayoffSpec& spec, std::span<const double> prices) {
  spec.validate();
  if (spec.kind == PayoffKind::BasketVariable) {
    throw InvalidArgument("basket_variable payoff needs the weight w1");
  }
  if (prices.size() != static_cast<std::size_t>(spec.underlyings())) {
    throw InvalidArgument("payoff: expected " + std::to_string(spec.underlyings()) +
                          " prices, got " + std::to_string(prices.size()));
  }
  switch (spec.kind) {
    case PayoffKind::Call: return std::max(prices[0] - spec.strike, 0.0);
    case PayoffKind::Put: return std::max(spec.strike - prices[0], 0.0);
    default: break;
  }
  double basket = 0.0;
  for (std::size_t k = 0; k < prices.size(); ++k) basket += spec.weights[k] * prices[k];
  return std::max(basket - spec.strike, 0.0);
}

double payoff(const PayoffSpec& spec, std::span<const double> prices, double w1) {
  if (spec.kind != PayoffKind::BasketVariable) return payoff(spec, prices);
  spec.validate();
  if (prices.size() != 2) throw InvalidArgument("payoff: basket_variable needs 2 prices");
  if (!(w1 >= 0.0 && w1 <= 1.0)) throw InvalidArgument("payoff: w1 must lie in [0, 1]");
  return std::max((1.0 - w1) * prices[0] + w1 * prices[1] - spec.strike, 0.0);
}

cond::Register weight_register(int qubits) {
  return {qubits, std::ldexp(1.0, -qubits)};
}

cond::ControlLayout finance_layout(const PayoffSpec& spec, const std::vector<PriceGrid>& grids,
                                   int target_size, int weight_qubits) {
  spec.validate();
  if (grids.size() != static_cast<std::size_t>(spec.underlyings())) {
    throw InvalidArgument("expected " + std::to_string(spec.underlyings()) +
                          " price grids, got " + std::to_string(grids.size()));
  }
  cond::ControlLayout layout;
  layout.target_size = target_size;
  for (const PriceGrid& g : grids) {
    g.validate();
    layout.registers.push_back(g.control_register());
  }
  if (spec.kind == PayoffKind::BasketVariable) {
    layout.registers.push_back(weight_register(weight_qubits));
  }
  layout.validate();
  return layout;
}

FinanceProblem build_training_problem(const PayoffSpec& spec, const std::vector<PriceGrid>& grids,
                                      int weight_qubits) {
  const cond::ControlLayout layout = finance_layout(spec, grids, 1, weight_qubits);
  const int k_count = layout.num_features();
  const int prices_count = spec.underlyings();

  std::uint64_t total = 1;
  for (int k = 0; k < k_count; ++k) total *= layout.grid_size(k);

  FinanceProblem out;
  std::vector<std::uint64_t> idx(static_cast<std::size_t>(k_count), 0);
  for (std::uint64_t row = 0; row < total; ++row) {
    std::uint64_t rest = row;
    for (int k = k_count - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = rest % layout.grid_size(k);
      rest /= layout.grid_size(k);
    }
    std::vector<double> features(static_cast<std::size_t>(k_count));
    std::vector<double> prices(static_cast<std::size_t>(prices_count));
    for (int k = 0; k < k_count; ++k) {
      features[static_cast<std::size_t>(k)] = layout.grid_value(k, idx[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < prices_count; ++k) {
      prices[static_cast<std::size_t>(k)] =
          grids[static_cast<std::size_t>(k)].price(idx[static_cast<std::size_t>(k)]);
    }
    const double value = spec.kind == PayoffKind::BasketVariable
                             ? payoff(spec, prices, features.back())
                             : payoff(spec, prices);
    out.problem.features.push_back(std::move(features));
    out.prices.push_back(std::move(prices));
    out.payoffs.push_back(value);
  }
  const double f_max = *std::max_element(out.payoffs.begin(), out.payoffs.end());
  out.problem.scale = train::LabelScale::to_unit(0.0, f_max);
  for (double f : out.payoffs) {
    out.problem.labels.push_back(std::clamp(out.problem.scale.apply(f), -1.0, 1.0));
  }
  out.problem.validate();
  return out;
}

}  // namespace cpqc::finance
