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

#include <vector>

#include "cpqc/sim/gate.hpp"
#include "cpqc/sim/statevector.hpp"

namespace cpqc::sim {

struct PauliTerm {
  double coefficient = 1.0;
  int qubit = 0;
  Axis axis = Axis::Z;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Weighted sum of single-qubit Pauli operators.
struct Observable {
  std::vector<PauliTerm> terms;

  /// sigma_Z on one qubit, the default readout.
  static Observable z(int qubit = 0);
  /// Mean of sigma_Z over `qubits`; stays within [-1, 1].
  static Observable mean_z(const std::vector<int>& qubits);

  /// Sum of |coefficient|, an upper bound on |<M>|.
  double norm_bound() const;
  /// Same terms with every qubit index shifted by `offset`.
  Observable shifted(int offset) const;

  friend bool operator==(const Observable&, const Observable&) = default;
};

/// <psi|M|psi>. Throws InvalidArgument if a term's qubit is out of range.
double expectation(const Statevector& state, const Observable& observable);

}  // namespace cpqc::sim
