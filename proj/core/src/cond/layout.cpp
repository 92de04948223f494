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

#include "cpqc/cond/layout.hpp"

#include <cmath>
#include <numbers>

#include "cpqc/common/errors.hpp"

namespace cpqc::cond {
namespace {

constexpr int kMaxRegister = 24;

void check_sizes(const std::vector<int>& sizes) {
  for (int s : sizes) {
    if (s < 1 || s > kMaxRegister) {
      throw InvalidArgument("control register size must be in [1, " +
                            std::to_string(kMaxRegister) + "], got " + std::to_string(s));
    }
  }
}

}  // namespace

double dyadic_step(int size) { return 2.0 * std::numbers::pi / std::ldexp(1.0, size); }

double half_turn_step(int size) { return std::numbers::pi / (std::ldexp(1.0, size) - 1.0); }

ControlLayout ControlLayout::dyadic(const std::vector<int>& sizes, int target_size) {
  check_sizes(sizes);
  ControlLayout layout;
  layout.target_size = target_size;
  for (int s : sizes) layout.registers.push_back({s, dyadic_step(s)});
  layout.validate();
  return layout;
}

ControlLayout ControlLayout::half_turn(const std::vector<int>& sizes, int target_size) {
  check_sizes(sizes);
  ControlLayout layout;
  layout.target_size = target_size;
  for (int s : sizes) layout.registers.push_back({s, half_turn_step(s)});
  layout.validate();
  return layout;
}

void ControlLayout::validate() const {
  if (target_size < 1) throw InvalidArgument("layout: target register needs >= 1 qubit");
  for (const Register& r : registers) {
    check_sizes({r.size});
    if (!std::isfinite(r.step) || r.step <= 0.0) {
      throw InvalidArgument("layout: register step must be finite and positive");
    }
    if (r.step * (std::ldexp(1.0, r.size) - 1.0) >= 2.0 * std::numbers::pi) {
      throw InvalidArgument("layout: grid leaves [0, 2 pi)");
    }
  }
}

int ControlLayout::control_qubits() const {
  int n = 0;
  for (const Register& r : registers) n += r.size;
  return n;
}

int ControlLayout::offset(int k) const {
  if (k < 0 || k >= num_features()) throw InvalidArgument("layout: register index out of range");
  int n = 0;
  for (int i = 0; i < k; ++i) n += registers[static_cast<std::size_t>(i)].size;
  return n;
}

std::uint64_t ControlLayout::grid_size(int k) const {
  offset(k);
  return std::uint64_t{1} << registers[static_cast<std::size_t>(k)].size;
}

double ControlLayout::grid_value(int k, std::uint64_t index) const {
  if (index >= grid_size(k)) throw InvalidArgument("layout: grid index out of range");
  return registers[static_cast<std::size_t>(k)].step * static_cast<double>(index);
}

std::vector<double> ControlLayout::grid(int k) const {
  std::vector<double> g(grid_size(k));
  for (std::uint64_t i = 0; i < g.size(); ++i) g[i] = grid_value(k, i);
  return g;
}

int ControlLayout::bit_qubit(int k, int j) const {
  const int size = registers.at(static_cast<std::size_t>(k)).size;
  if (j < 0 || j >= size) throw InvalidArgument("layout: bit index out of range");
  return offset(k) + size - 1 - j;
}

std::uint64_t grid_index(double x, int k, const ControlLayout& layout) {
  const std::uint64_t n = layout.grid_size(k);
  const double step = layout.registers[static_cast<std::size_t>(k)].step;
  const double pos = std::round(x / step);
  if (!std::isfinite(x) || pos < 0.0 || pos >= static_cast<double>(n) ||
      std::abs(x - pos * step) > 1e-9) {
    throw InvalidArgument("value " + std::to_string(x) + " is not on the grid of register " +
                          std::to_string(k));
  }
  return static_cast<std::uint64_t>(pos);
}

std::string basis_encode(double x, int k, const ControlLayout& layout) {
  const std::uint64_t index = grid_index(x, k, layout);
  const int size = layout.registers[static_cast<std::size_t>(k)].size;
  std::string bits(static_cast<std::size_t>(size), '0');
  for (int j = 0; j < size; ++j) {
    if ((index >> j) & 1U) bits[static_cast<std::size_t>(size - 1 - j)] = '1';
  }
  return bits;
}

}  // namespace cpqc::cond
