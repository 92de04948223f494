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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpqc/cond/conditional.hpp"

namespace cpqc::cond {

/// `.cpqc` text with a `conditional` header naming register sizes, grid
/// steps and the target width.
std::string serialize_conditional(const ConditionalCircuit& cc,
                                  std::span<const double> theta = {});

struct ConditionalDocument {
  ConditionalCircuit conditional;
  std::vector<double> theta;
};

/// Throws ParseError when the document is malformed or lacks the
/// conditional section.
ConditionalDocument deserialize_conditional(std::string_view text);

}  // namespace cpqc::cond
