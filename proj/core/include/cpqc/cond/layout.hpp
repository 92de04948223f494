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

namespace cpqc::cond {

/// One control register: `size` qubits reading grid values step * index.
struct Register {
  int size = 1;
  double step = 0.0;

  friend bool operator==(const Register&, const Register&) = default;
};

/// Step of the dyadic grid 2 pi k / 2^n.
double dyadic_step(int size);
/// Step of the grid pi k / (2^n - 1), whose top point is pi.
double half_turn_step(int size);

/// Control registers r_1..r_K (feature k reads register k), concatenated
/// most significant first, followed by the m-qubit target register.
struct ControlLayout {
  std::vector<Register> registers;
  int target_size = 1;

  /// Registers with the dyadic step for each size.
  static ControlLayout dyadic(const std::vector<int>& sizes, int target_size);
  /// Registers with the half-turn step for each size.
  static ControlLayout half_turn(const std::vector<int>& sizes, int target_size);

  /// Throws InvalidArgument unless every register has size >= 1, a finite
  /// positive step and all grid values inside [0, 2 pi).
  void validate() const;

  int num_features() const { return static_cast<int>(registers.size()); }
  int control_qubits() const;
  int total_qubits() const { return control_qubits() + target_size; }
  /// First qubit of register k.
  int offset(int k) const;
  std::uint64_t grid_size(int k) const;
  double grid_value(int k, std::uint64_t index) const;
  std::vector<double> grid(int k) const;
  /// Qubit carrying bit j (value 2^j) of register k.
  int bit_qubit(int k, int j) const;

  friend bool operator==(const ControlLayout&, const ControlLayout&) = default;
};

/// Grid index of x in register k. Throws InvalidArgument when x is more
/// than 1e-9 from every grid point.
std::uint64_t grid_index(double x, int k, const ControlLayout& layout);

/// b(x): big-endian bit string of the grid index, e.g. "100".
std::string basis_encode(double x, int k, const ControlLayout& layout);

}  // namespace cpqc::cond
