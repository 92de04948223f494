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

#include "cpqc/cond/loader.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cpqc/common/errors.hpp"

namespace cpqc::cond {
namespace {

void ucry(std::span<const int> controls, int target, std::vector<double> angles,
          std::vector<sim::GateOp>& out) {
  if (controls.empty()) {
    if (angles[0] != 0.0) out.push_back(sim::GateOp::rotation(sim::Axis::Y, target, angles[0]));
    return;
  }
  if (std::all_of(angles.begin(), angles.end(), [](double a) { return a == 0.0; })) return;
  const std::size_t half = angles.size() / 2;
  std::vector<double> sum(half), diff(half);
  for (std::size_t i = 0; i < half; ++i) {
    sum[i] = 0.5 * (angles[i] + angles[i + half]);
    diff[i] = 0.5 * (angles[i] - angles[i + half]);
  }
  // With the first control set, X RY(b) X = RY(-b) turns a + b into a - b.
  const auto rest = controls.subspan(1);
  ucry(rest, target, std::move(sum), out);
  out.push_back(sim::GateOp::cnot(controls[0], target));
  ucry(rest, target, std::move(diff), out);
  out.push_back(sim::GateOp::cnot(controls[0], target));
}

}  // namespace

std::vector<sim::GateOp> uniformly_controlled_ry(std::span<const int> controls, int target,
                                                 std::span<const double> angles) {
  if (angles.size() != (std::size_t{1} << controls.size())) {
    throw InvalidArgument("uniformly_controlled_ry: need 2^k angles");
  }
  std::vector<sim::GateOp> out;
  ucry(controls, target, {angles.begin(), angles.end()}, out);
  return out;
}

std::vector<sim::GateOp> state_preparation(std::span<const double> probs,
                                           std::span<const int> qubits) {
  if (probs.size() != (std::size_t{1} << qubits.size())) {
    throw InvalidArgument("state_preparation: need 2^n probabilities");
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidArgument("state_preparation: bad probability");
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("state_preparation: sum differs from 1");

  std::vector<sim::GateOp> out;
  const double u = 1.0 / static_cast<double>(probs.size());
  if (std::all_of(probs.begin(), probs.end(), [u](double p) { return std::abs(p - u) < 1e-15; })) {
    for (int q : qubits) out.push_back(sim::GateOp::h(q));
    return out;
  }
  const std::size_t n = qubits.size();
  for (std::size_t level = 0; level < n; ++level) {
    // Mass of every prefix of length `level`, split by the next bit.
    const std::size_t prefixes = std::size_t{1} << level;
    const std::size_t block = probs.size() / prefixes;
    std::vector<double> angles(prefixes, 0.0);
    for (std::size_t pre = 0; pre < prefixes; ++pre) {
      double zero = 0.0, one = 0.0;
      for (std::size_t i = 0; i < block / 2; ++i) zero += probs[pre * block + i];
      for (std::size_t i = block / 2; i < block; ++i) one += probs[pre * block + i];
      if (zero + one > 0.0) angles[pre] = 2.0 * std::atan2(std::sqrt(one), std::sqrt(zero));
    }
    auto gates = uniformly_controlled_ry(qubits.first(level), qubits[level], angles);
    out.insert(out.end(), gates.begin(), gates.end());
  }
  return out;
}

std::vector<sim::GateOp> load_distribution(const ProductDistribution& dist,
                                           const ControlLayout& layout) {
  dist.validate(layout);
  std::vector<sim::GateOp> out;
  for (int k = 0; k < layout.num_features(); ++k) {
    std::vector<int> qubits;
    for (int j = 0; j < layout.registers[static_cast<std::size_t>(k)].size; ++j) {
      qubits.push_back(layout.offset(k) + j);
    }
    auto gates = state_preparation(dist.registers[static_cast<std::size_t>(k)], qubits);
    out.insert(out.end(), gates.begin(), gates.end());
  }
  return out;
}

}  // namespace cpqc::cond
