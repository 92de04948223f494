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

#include "cpqc/transpile/decompose.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::transpile {
namespace {

using sim::Axis;
using sim::GateKind;
using sim::GateOp;

constexpr double kPi = std::numbers::pi;

class Emitter {
 public:
  explicit Emitter(std::vector<StagedGate>& out) : out_(out) {}

  void stage(Stage s) { stage_ = s; }
  void one(GateOp g) { out_.push_back({std::move(g), stage_}); }
  void cx(int c, int t) { one(GateOp::cnot(c, t)); }
  void h(int q) { one(GateOp::h(q)); }
  void phase(int q, double a) { one(GateOp::u3(q, 0.0, 0.0, a)); }

  void toffoli(int a, int b, int t) {
    const double q = kPi / 4.0;
    h(t);
    cx(b, t);
    phase(t, -q);
    cx(a, t);
    phase(t, q);
    cx(b, t);
    phase(t, -q);
    cx(a, t);
    phase(b, q);
    phase(t, q);
    h(t);
    cx(a, b);
    phase(a, q);
    phase(b, -q);
    cx(a, b);
  }

  // Multi-controlled Z over all of `qubits` as a sum of parity phases:
  // prod x_i = 2^{1-m} sum_{S != {}} (-1)^{|S|+1} parity_S(x).
  void multi_z(const std::vector<int>& qubits) {
    const std::size_t m = qubits.size();
    const double unit = kPi / std::ldexp(1.0, static_cast<int>(m) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<int> members;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) members.push_back(qubits[i]);
      }
      const double angle = (members.size() % 2 == 1 ? 1.0 : -1.0) * unit;
      const int sink = members.back();
      for (std::size_t i = 0; i + 1 < members.size(); ++i) cx(members[i], sink);
      phase(sink, angle);
      for (std::size_t i = members.size() - 1; i-- > 0;) cx(members[i], sink);
    }
  }

  void multi_x(const std::vector<int>& controls, int target) {
    if (controls.size() == 1) return cx(controls[0], target);
    if (controls.size() == 2) return toffoli(controls[0], controls[1], target);
    std::vector<int> all = controls;
    all.push_back(target);
    h(target);
    multi_z(all);
    h(target);
  }

  void controlled_rotation(Axis axis, const std::vector<int>& controls, int target, double t) {
    // X anticommutes with Y and Z but not with X, so the X axis is moved to
    // Z first.
    const Axis work = axis == Axis::X ? Axis::Z : axis;
    if (axis == Axis::X) h(target);
    one(GateOp::rotation(work, target, t / 2.0));
    multi_x(controls, target);
    one(GateOp::rotation(work, target, -t / 2.0));
    multi_x(controls, target);
    if (axis == Axis::X) h(target);
  }

 private:
  std::vector<StagedGate>& out_;
  Stage stage_ = Stage::Other;
};

void expand(const StagedGate& sg, Emitter& e) {
  const GateOp& g = sg.gate;
  e.stage(sg.stage);
  if (!g.is_controlled()) return e.one(g);
  if (g.kind == GateKind::X) return e.multi_x(g.controls, g.target);
  if (sim::is_rotation(g.kind)) {
    return e.controlled_rotation(sim::rotation_axis(g.kind), g.controls, g.target, g.angle);
  }
  throw UnsupportedGate("decompose: controlled " + std::string(sim::gate_kind_name(g.kind)) +
                        " is not supported");
}

double wrap(double a) { return std::remainder(a, 2.0 * kPi); }

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::Encoding: return "encoding";
    case Stage::Parameterized: return "parameterized";
    case Stage::Comparator: return "comparator";
    case Stage::Adder: return "adder";
    case Stage::PayoffRotation: return "payoff_rotation";
    case Stage::Loader: return "loader";
    case Stage::Other: return "other";
  }
  return "other";
}

std::vector<Stage> all_stages() {
  return {Stage::Encoding, Stage::Parameterized, Stage::Comparator, Stage::Adder,
          Stage::PayoffRotation, Stage::Loader, Stage::Other};
}

void GateCircuit::append(const std::vector<sim::GateOp>& ops, Stage stage) {
  for (const auto& g : ops) add(g, stage);
}

GateCircuit from_circuit(const ir::Circuit& circuit, const ir::Binding& binding,
                         int control_qubits) {
  GateCircuit out;
  out.num_qubits = circuit.num_qubits;
  const auto gates = ir::to_gate_sequence(circuit, binding);
  std::size_t i = 0;
  for (const ir::Layer& layer : circuit.layers) {
    for (const ir::Block& block : layer.blocks) {
      const GateOp& g = gates[i++];
      bool control = std::holds_alternative<ir::EncodingBlock>(block) || g.target < control_qubits;
      for (int c : g.controls) control = control || c < control_qubits;
      out.add(g, control ? Stage::Encoding : Stage::Parameterized);
    }
  }
  return out;
}

bool is_identity_up_to_phase(const sim::Matrix2& m, double tol) {
  if (std::abs(m[1]) > tol || std::abs(m[2]) > tol) return false;
  return std::abs(m[0] - m[3]) < tol;
}

U3Angles u3_angles(const sim::Matrix2& m) {
  // m = e^{i alpha} [[c, -e^{i lambda} s], [e^{i phi} s, e^{i(phi+lambda)} c]]
  const double c = std::abs(m[0]);
  const double s = std::abs(m[2]);
  U3Angles a;
  a.theta = 2.0 * std::atan2(s, c);
  constexpr double eps = 1e-14;
  if (c > eps) {
    const double alpha = std::arg(m[0]);
    if (s > eps) {
      a.phi = std::arg(m[2]) - alpha;
      a.lambda = std::arg(-m[1]) - alpha;
    } else {
      a.lambda = std::arg(m[3]) - alpha;
    }
  } else {
    const double alpha = std::arg(m[2]);
    a.lambda = std::arg(-m[1]) - alpha;
  }
  a.phi = wrap(a.phi);
  a.lambda = wrap(a.lambda);
  return a;
}

GateCircuit decompose(const GateCircuit& circuit, const DecomposeOptions& options) {
  std::vector<StagedGate> raw;
  Emitter emitter(raw);
  for (const StagedGate& sg : circuit.gates) {
    sim::validate_gate(sg.gate, circuit.num_qubits);
    expand(sg, emitter);
  }

  GateCircuit out;
  out.num_qubits = circuit.num_qubits;
  const auto to_u3 = [](int q, const sim::Matrix2& m) {
    const U3Angles a = u3_angles(m);
    return GateOp::u3(q, a.theta, a.phi, a.lambda);
  };
  if (!options.merge_single_qubit) {
    for (const StagedGate& sg : raw) {
      if (sg.gate.is_controlled()) {
        out.gates.push_back(sg);
      } else {
        out.add(to_u3(sg.gate.target, sim::gate_matrix(sg.gate)), sg.stage);
      }
    }
    return out;
  }

  struct Pending {
    sim::Matrix2 m;
    Stage stage;
  };
  std::vector<std::optional<Pending>> pending(static_cast<std::size_t>(circuit.num_qubits));
  const auto flush = [&](int q) {
    auto& p = pending[static_cast<std::size_t>(q)];
    if (p && !is_identity_up_to_phase(p->m)) out.add(to_u3(q, p->m), p->stage);
    p.reset();
  };
  for (const StagedGate& sg : raw) {
    const GateOp& g = sg.gate;
    if (g.is_controlled()) {
      flush(g.controls[0]);
      flush(g.target);
      out.gates.push_back(sg);
      continue;
    }
    auto& p = pending[static_cast<std::size_t>(g.target)];
    const sim::Matrix2 m = sim::gate_matrix(g);
    if (p) {
      p->m = sim::multiply(m, p->m);
    } else {
      p = Pending{m, sg.stage};
    }
  }
  for (int q = 0; q < circuit.num_qubits; ++q) flush(q);
  return out;
}

}  // namespace cpqc::transpile
