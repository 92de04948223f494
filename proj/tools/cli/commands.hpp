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
#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"

namespace cpqc::cli {

/// Where a command reads its circuit from: a `.cpqc` file or a named
/// fixture.
struct CircuitSource {
  std::string path;
  std::string fixture;
};

struct VerifyOptions {
  CircuitSource source;
  /// Register sizes, one per feature; taken from the config when empty.
  std::vector<int> sizes;
  int trials = 100;
  double tolerance = 1e-10;
};

struct PriceOptions {
  /// model.json written by `train`; enables the cpqc backend.
  std::string model;
  /// Comma-separated backends; empty picks exact, arithmetic and (with a
  /// model) cpqc.
  std::string backends;
};

/// Each command returns an exit code and writes its artifacts under
/// config.out.
int cmd_train(const RunConfig& config, std::ostream& out);
int cmd_conditional(const RunConfig& config, const CircuitSource& source,
                    const std::vector<int>& sizes, std::ostream& out);
int cmd_verify(const RunConfig& config, const VerifyOptions& options, std::ostream& out);
int cmd_price(const RunConfig& config, const PriceOptions& options, std::ostream& out);
int cmd_benchmark(const RunConfig& config, std::ostream& out);

}  // namespace cpqc::cli
