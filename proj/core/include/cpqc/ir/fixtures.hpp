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

#include "cpqc/ir/circuit.hpp"

namespace cpqc::ir {

/// A reference trained circuit together with its parameter vector.
struct Fixture {
  std::string name;
  Circuit circuit;
  std::vector<double> theta;
};

/// Names accepted by load_fixture.
std::vector<std::string> fixture_names();

/// call_fig3: 3-qubit European call model, one feature.
/// basket_figA2: 4-qubit fixed-weight basket model, features (x0, x1).
/// basket_var_weight_figA4: 2-qubit basket model, features (x0, x1, w1).
/// Throws InvalidArgument for an unknown name.
Fixture load_fixture(std::string_view name);

}  // namespace cpqc::ir
