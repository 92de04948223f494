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

#include "cpqc/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpqc/common/errors.hpp"

namespace cpqc::sim {

char axis_letter(Axis axis) {
  switch (axis) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

std::optional<Axis> parse_axis(char letter) {
  switch (letter) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: return std::nullopt;
  }
}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::SX: return "sx";
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::U3: return "u3";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

GateKind rotation_kind(Axis axis) {
  switch (axis) {
    case Axis::X: return GateKind::RX;
    case Axis::Y: return GateKind::RY;
    case Axis::Z: return GateKind::RZ;
  }
  return GateKind::RZ;
}

Axis rotation_axis(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return Axis::X;
    case GateKind::RY: return Axis::Y;
    case GateKind::RZ: return Axis::Z;
    default: break;
  }
  throw InvalidArgument("rotation_axis: not a rotation gate");
}

GateOp GateOp::rotation(Axis axis, int target, double angle) {
  return GateOp{rotation_kind(axis), target, {}, angle};
}

GateOp GateOp::controlled_rotation(Axis axis, std::vector<int> controls,
                                   int target, double angle) {
  return GateOp{rotation_kind(axis), target, std::move(controls), angle};
}

GateOp GateOp::cnot(int control, int target) {
  return GateOp{GateKind::X, target, {control}};
}

GateOp GateOp::toffoli(int control0, int control1, int target) {
  return GateOp{GateKind::X, target, {control0, control1}};
}

GateOp GateOp::x(int target) { return GateOp{GateKind::X, target, {}}; }
GateOp GateOp::sx(int target) { return GateOp{GateKind::SX, target, {}}; }
GateOp GateOp::h(int target) { return GateOp{GateKind::H, target, {}}; }

GateOp GateOp::u3(int target, double theta, double phi, double lambda) {
  return GateOp{GateKind::U3, target, {}, theta, phi, lambda};
}

int GateOp::span() const {
  int top = target;
  for (int c : controls) top = std::max(top, c);
  return top + 1;
}

Matrix2 rotation_matrix(Axis axis, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::X: return {c, -i * s, -i * s, c};
    case Axis::Y: return {c, -s, s, c};
    case Axis::Z: return {std::polar(1.0, -angle / 2.0), 0.0, 0.0,
                          std::polar(1.0, angle / 2.0)};
  }
  return {1.0, 0.0, 0.0, 1.0};
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {c, -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

Matrix2 gate_matrix(const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::RX: return rotation_matrix(Axis::X, gate.angle);
    case GateKind::RY: return rotation_matrix(Axis::Y, gate.angle);
    case GateKind::RZ: return rotation_matrix(Axis::Z, gate.angle);
    case GateKind::SX: {
      const Complex a{0.5, 0.5};
      const Complex b{0.5, -0.5};
      return {a, b, b, a};
    }
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {r, r, r, -r};
    }
    case GateKind::U3: return u3_matrix(gate.angle, gate.phi, gate.lambda);
  }
  throw UnsupportedGate("gate_matrix: unknown gate kind");
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace cpqc::sim
