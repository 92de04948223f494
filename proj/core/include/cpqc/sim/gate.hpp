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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace cpqc::sim {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_letter(Axis axis);
std::optional<Axis> parse_axis(char letter);

/// Single-target gate kinds. Controlled variants (CNOT, Toffoli, controlled
/// rotations) are a base kind plus a non-empty control list.
enum class GateKind : std::uint8_t { RX, RY, RZ, SX, X, H, U3 };

std::string_view gate_kind_name(GateKind kind);
bool is_rotation(GateKind kind);
GateKind rotation_kind(Axis axis);
Axis rotation_axis(GateKind kind);

/// One gate on a statevector: a 2x2 unitary on `target`, applied on the
/// subspace where every qubit in `controls` is |1>.
///
/// Rotations use R_a(t) = exp(-i t sigma_a / 2). U3 uses the usual
/// U(theta, phi, lambda) convention with `angle` as theta.
struct GateOp {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<int> controls;
  double angle = 0.0;
  double phi = 0.0;
  double lambda = 0.0;

  static GateOp rotation(Axis axis, int target, double angle);
  static GateOp controlled_rotation(Axis axis, std::vector<int> controls,
                                    int target, double angle);
  static GateOp cnot(int control, int target);
  static GateOp toffoli(int control0, int control1, int target);
  static GateOp x(int target);
  static GateOp sx(int target);
  static GateOp h(int target);
  static GateOp u3(int target, double theta, double phi, double lambda);

  bool is_controlled() const { return !controls.empty(); }
  /// Highest qubit index touched plus one.
  int span() const;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// The 2x2 unitary acting on the target (ignoring controls).
Matrix2 gate_matrix(const GateOp& gate);
Matrix2 rotation_matrix(Axis axis, double angle);
Matrix2 u3_matrix(double theta, double phi, double lambda);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);

}  // namespace cpqc::sim
