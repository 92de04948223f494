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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpqc/ir/circuit.hpp"

namespace cpqc::ir {

/// Register header of a conditional circuit document.
struct ConditionalHeader {
  std::vector<int> sizes;
  std::vector<double> steps;
  int target_size = 0;

  friend bool operator==(const ConditionalHeader&, const ConditionalHeader&) = default;
};

/// Parsed `.cpqc` document.
struct Document {
  Circuit circuit;
  std::vector<double> theta;
  std::optional<ConditionalHeader> conditional;
};

/// Line-oriented text form:
///
///   cpqc-ir v1
///   num_qubits 3
///   num_features 1
///   num_params 2
///   measure 0
///   theta 0.5 -1.25          (optional)
///   layer
///   ry 2 param 0
///   rz 1 feature 0
///   rx 0 angle 0.25 ctrl 1 2
///   cx 1 0
///
/// Gate lines are `kind target [param s | feature k | angle v] [ctrl c...]`
/// for kind in rx, ry, rz, sx, x, h, u3 (u3 takes `angle t p l`). `cx c t`
/// and `ccx c0 c1 t` are shorthands. Every gate belongs to the most recent
/// `layer` line. '#' starts a comment.
std::string serialize(const Circuit& circuit, std::span<const double> theta = {},
                      const std::optional<ConditionalHeader>& conditional = std::nullopt);

/// Parses and validates a document. Throws ParseError with the 1-based line
/// and column of the offending token.
Document deserialize(std::string_view text);

/// File helpers; I/O failures throw cpqc::Error.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace cpqc::ir
