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
#include <string>
#include <vector>

#include "cpqc/common/errors.hpp"
#include "cpqc/finance/arithmetic.hpp"
#include "cpqc/finance/market.hpp"
#include "cpqc/finance/problem.hpp"
#include "cpqc/search/genetic.hpp"

namespace cpqc::cli {

/// Bad or unknown configuration value. The message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Everything a command can be configured with. Files use sectioned
/// `key = value` lines; ';' starts a comment.
struct RunConfig {
  std::uint64_t seed = 0;
  std::string out = ".";

  finance::PayoffSpec payoff;
  finance::MarketModel market;

  /// Qubits per underlying.
  std::vector<int> grid_qubits{3};
  finance::GridConvention convention = finance::GridConvention::HalfTurn;
  int weight_qubits = 3;
  double weight = 0.5;

  /// Width of the trained circuit.
  int model_qubits = 3;
  bool native_pool = false;
  double initial_theta = 0.1;
  search::GeneticConfig genetic;

  finance::ArithmeticOptions arithmetic;

  int bench_n_min = 3;
  int bench_n_max = 14;

  /// Price grids for the payoff's underlyings.
  std::vector<finance::PriceGrid> grids() const;
  /// Replaces the desk-scale search sizes with the full 20/48/20 run.
  void apply_paper_scale();
  /// Throws ConfigError naming the first bad field.
  void validate() const;
};

/// Parses a config document. Unknown sections or keys are errors.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// "1, 2,3" -> {1, 2, 3}; `field` is used in error messages.
std::vector<int> parse_int_list(const std::string& value, const std::string& field);

}  // namespace cpqc::cli
