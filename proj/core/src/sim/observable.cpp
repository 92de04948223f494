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

#include "cpqc/sim/observable.hpp"

#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::sim {

Observable Observable::z(int qubit) { return Observable{{{1.0, qubit, Axis::Z}}}; }

Observable Observable::mean_z(const std::vector<int>& qubits) {
  if (qubits.empty()) throw InvalidArgument("Observable::mean_z: no qubits");
  Observable obs;
  const double weight = 1.0 / static_cast<double>(qubits.size());
  for (int q : qubits) obs.terms.push_back({weight, q, Axis::Z});
  return obs;
}

double Observable::norm_bound() const {
  double total = 0.0;
  for (const auto& t : terms) total += std::abs(t.coefficient);
  return total;
}

Observable Observable::shifted(int offset) const {
  Observable out = *this;
  for (auto& t : out.terms) t.qubit += offset;
  return out;
}

double expectation(const Statevector& state, const Observable& observable) {
  const auto amps = state.amplitudes();
  double total = 0.0;
  for (const PauliTerm& term : observable.terms) {
    if (term.qubit < 0 || term.qubit >= state.num_qubits()) {
      throw InvalidArgument("expectation: observable qubit " +
                            std::to_string(term.qubit) + " out of range");
    }
    const std::uint64_t mask = state.qubit_mask(term.qubit);
    double value = 0.0;
    switch (term.axis) {
      case Axis::Z:
        for (std::size_t i = 0; i < amps.size(); ++i) {
          value += (i & mask) ? -std::norm(amps[i]) : std::norm(amps[i]);
        }
        break;
      case Axis::X:
        // <psi|X|psi> = 2 Re sum_{i: bit 0} conj(a_i) a_{i|mask}
        for (std::size_t i = 0; i < amps.size(); ++i) {
          if (!(i & mask)) value += 2.0 * std::real(std::conj(amps[i]) * amps[i | mask]);
        }
        break;
      case Axis::Y:
        // Y|0> = i|1>, Y|1> = -i|0>
        for (std::size_t i = 0; i < amps.size(); ++i) {
          if (!(i & mask)) {
            value += 2.0 * std::imag(std::conj(amps[i]) * amps[i | mask]);
          }
        }
        break;
    }
    total += term.coefficient * value;
  }
  return total;
}

}  // namespace cpqc::sim
