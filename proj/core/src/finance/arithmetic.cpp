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

#include "cpqc/finance/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cpqc/common/errors.hpp"
#include "cpqc/cond/loader.hpp"

namespace cpqc::finance {
namespace {

using sim::GateOp;

void or_into(int a, int b, int target, std::vector<GateOp>& out) {
  out.push_back(GateOp::x(a));
  out.push_back(GateOp::x(b));
  out.push_back(GateOp::toffoli(a, b, target));
  out.push_back(GateOp::x(target));
  out.push_back(GateOp::x(a));
  out.push_back(GateOp::x(b));
}

std::vector<int> derive_integer_weights(const PayoffSpec& spec, const std::vector<int>& given) {
  if (spec.kind != PayoffKind::BasketFixed) return {1};
  if (!given.empty()) {
    if (given.size() != spec.weights.size()) {
      throw InvalidArgument("integer weights: expected " + std::to_string(spec.weights.size()) +
                            " entries");
    }
    const double total = std::accumulate(given.begin(), given.end(), 0.0);
    for (std::size_t k = 0; k < given.size(); ++k) {
      if (given[k] < 0 || total <= 0.0 ||
          std::abs(given[k] / total - spec.weights[k]) > 1e-9) {
        throw InvalidArgument("integer weights are not proportional to the basket weights");
      }
    }
    return given;
  }
  for (int d = 1; d <= 4096; ++d) {
    std::vector<int> w;
    bool ok = true;
    for (double x : spec.weights) {
      const double scaled = x * d;
      const double r = std::round(scaled);
      if (std::abs(scaled - r) > 1e-9 * d) {
        ok = false;
        break;
      }
      w.push_back(static_cast<int>(r));
    }
    if (ok) return w;
  }
  throw InvalidArgument("basket weights have no small integer scaling");
}

int bits_for(std::uint64_t max_value) {
  if (max_value <= 1) return 1;
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(max_value)))) + 1;
}

}  // namespace

std::vector<GateOp> comparator(std::span<const int> value, std::uint64_t threshold, int flag,
                               std::span<const int> work, bool uncompute) {
  const std::size_t size = value.size();
  if (size == 0 || size > 62) throw InvalidArgument("comparator: register size out of range");
  std::vector<GateOp> out;
  if (threshold == 0) {
    out.push_back(GateOp::x(flag));
    return out;
  }
  const std::uint64_t span = std::uint64_t{1} << size;
  if (threshold >= span) return out;
  // V >= t iff V + (2^n - t) carries out of the top bit.
  const std::uint64_t addend = span - threshold;
  const auto bit = [&](std::size_t j) { return value[size - 1 - j]; };

  std::vector<GateOp> compute;
  std::vector<GateOp> last;
  int carry = -1;  // -1: classically zero
  std::size_t used = 0;
  for (std::size_t j = 0; j < size; ++j) {
    const bool final_bit = j + 1 == size;
    const bool one = (addend >> j) & 1U;
    auto& sink = final_bit ? last : compute;
    if (carry < 0) {
      if (!one) continue;
      if (final_bit) {
        sink.push_back(GateOp::cnot(bit(j), flag));
      } else {
        carry = bit(j);
      }
      continue;
    }
    int target = flag;
    if (!final_bit) {
      if (used >= work.size()) throw InvalidArgument("comparator: not enough work qubits");
      target = work[used++];
    }
    if (one) {
      or_into(bit(j), carry, target, sink);
    } else {
      sink.push_back(GateOp::toffoli(bit(j), carry, target));
    }
    carry = target;
  }
  out = compute;
  out.insert(out.end(), last.begin(), last.end());
  if (uncompute) out.insert(out.end(), compute.rbegin(), compute.rend());
  return out;
}

std::vector<GateOp> controlled_add_constant(int control, std::uint64_t constant,
                                            std::span<const int> sum, std::span<const int> work) {
  const std::size_t length = sum.size();
  const auto s = [&](std::size_t j) { return sum[length - 1 - j]; };
  std::vector<GateOp> out;
  for (std::size_t b = 0; b < length && b < 64; ++b) {
    if (!((constant >> b) & 1U)) continue;
    const std::size_t top = length - 1;
    if (top - b > work.size()) throw InvalidArgument("adder: not enough work qubits");
    // a[i] = control & s_b & ... & s_i, held in work[i - b].
    const auto a = [&](std::size_t i) { return work[i - b]; };
    const auto chain = [&](std::size_t i) {
      return i == b ? GateOp::toffoli(control, s(b), a(b)) : GateOp::toffoli(a(i - 1), s(i), a(i));
    };
    for (std::size_t i = b; i < top; ++i) out.push_back(chain(i));
    for (std::size_t i = top; i > b; --i) {
      out.push_back(GateOp::cnot(a(i - 1), s(i)));
      out.push_back(chain(i - 1));
    }
    out.push_back(GateOp::cnot(control, s(b)));
  }
  return out;
}

double ArithmeticCircuit::value_at(std::uint64_t joint_index) const {
  std::uint64_t v = 0;
  for (std::size_t k = register_sizes.size(); k-- > 0;) {
    const std::uint64_t idx = joint_index & ((std::uint64_t{1} << register_sizes[k]) - 1);
    joint_index >>= register_sizes[k];
    v += static_cast<std::uint64_t>(weights[k]) * idx;
  }
  return x0 + x_step * static_cast<double>(v);
}

ArithmeticCircuit build_arithmetic_circuit(const PayoffSpec& spec,
                                           const std::vector<PriceGrid>& grids,
                                           const ArithmeticOptions& options) {
  spec.validate();
  if (spec.kind == PayoffKind::BasketVariable) {
    throw InvalidArgument("basket_variable has no arithmetic baseline");
  }
  if (!(options.c_tilde > 0.0) || !(options.c_tilde < std::numbers::pi / 4.0)) {
    throw InvalidArgument("arithmetic.c_tilde must lie in (0, pi/4)");
  }
  if (grids.size() != static_cast<std::size_t>(spec.underlyings())) {
    throw InvalidArgument("expected " + std::to_string(spec.underlyings()) + " price grids");
  }
  for (const PriceGrid& g : grids) {
    g.validate();
    const double rel = 1e-12 * std::max(1.0, std::abs(g.spacing()));
    if (std::abs(g.s_min - grids[0].s_min) > rel || std::abs(g.spacing() - grids[0].spacing()) > rel) {
      throw InvalidArgument("basket grids must share their origin and spacing");
    }
  }

  ArithmeticCircuit ac;
  ac.weights = derive_integer_weights(spec, options.integer_weights);
  ac.c_tilde = options.c_tilde;
  ac.strike = spec.strike;
  ac.is_put = spec.kind == PayoffKind::Put;
  for (const PriceGrid& g : grids) {
    ac.register_sizes.push_back(g.qubits);
    ac.underlying_qubits += g.qubits;
  }

  const bool basket = spec.kind == PayoffKind::BasketFixed;
  std::uint64_t max_sum = 0;
  int total_weight = 0;
  for (std::size_t k = 0; k < grids.size(); ++k) {
    max_sum += static_cast<std::uint64_t>(ac.weights[k]) * (grids[k].size() - 1);
    total_weight += ac.weights[k];
  }
  int next = ac.underlying_qubits;
  if (basket) {
    const int sum_bits = bits_for(max_sum);
    for (int i = 0; i < sum_bits; ++i) ac.value_register.push_back(next++);
  } else {
    for (int i = 0; i < ac.underlying_qubits; ++i) ac.value_register.push_back(i);
  }
  ac.flag = next++;
  ac.payoff_qubit = next++;
  ac.work_ancillas = static_cast<int>(ac.value_register.size()) - 1;
  std::vector<int> work;
  for (int i = 0; i < ac.work_ancillas; ++i) work.push_back(next++);
  ac.circuit.num_qubits = next;

  ac.x0 = grids[0].s_min;
  ac.x_step = grids[0].spacing() / total_weight;
  ac.x_max = ac.x0 + ac.x_step * static_cast<double>(max_sum);

  using transpile::Stage;
  if (!options.loader.empty()) {
    if (options.loader.size() != grids.size()) {
      throw InvalidArgument("loader: expected one distribution per underlying");
    }
    int offset = 0;
    for (std::size_t k = 0; k < grids.size(); ++k) {
      std::vector<int> qubits;
      for (int i = 0; i < grids[k].qubits; ++i) qubits.push_back(offset + i);
      offset += grids[k].qubits;
      ac.circuit.append(cond::state_preparation(options.loader[k], qubits), Stage::Loader);
    }
  }

  if (basket) {
    int offset = 0;
    for (std::size_t k = 0; k < grids.size(); ++k) {
      for (int j = 0; j < grids[k].qubits; ++j) {
        const int control = offset + grids[k].qubits - 1 - j;
        const std::uint64_t constant = static_cast<std::uint64_t>(ac.weights[k]) << j;
        ac.circuit.append(controlled_add_constant(control, constant, ac.value_register, work),
                          Stage::Adder);
      }
      offset += grids[k].qubits;
    }
  }

  // Threshold on the integer V: call flags X > K, put flags X < K.
  const double v = (spec.strike - ac.x0) / ac.x_step;
  if (ac.is_put) {
    ac.threshold = v <= 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(v - 1e-9));
  } else {
    ac.threshold = v < 0.0 ? 0 : static_cast<std::uint64_t>(std::floor(v + 1e-9)) + 1;
  }
  const std::uint64_t register_span = std::uint64_t{1} << ac.value_register.size();
  ac.threshold = std::min(ac.threshold, register_span);
  ac.circuit.append(comparator(ac.value_register, ac.threshold, ac.flag, work, options.uncompute),
                    Stage::Comparator);
  if (ac.is_put) ac.circuit.add(GateOp::x(ac.flag), Stage::Comparator);

  // sin^2(pi/4 + y) with y = -c for out-of-the-money states and
  // y = c (2 f - 1) in the money, f the payoff normalised to [0, 1].
  const double c = options.c_tilde;
  ac.circuit.add(GateOp::rotation(sim::Axis::Y, ac.payoff_qubit, std::numbers::pi / 2.0 - 2.0 * c),
                 Stage::PayoffRotation);
  const double span = ac.is_put ? spec.strike - ac.x0 : ac.x_max - spec.strike;
  if (span > 0.0) {
    const double alpha = ac.is_put ? 1.0 : (ac.x0 - spec.strike) / span;
    const double beta = (ac.is_put ? -ac.x_step : ac.x_step) / span;
    if (alpha != 0.0) {
      ac.circuit.add(GateOp::controlled_rotation(sim::Axis::Y, {ac.flag}, ac.payoff_qubit,
                                                 4.0 * c * alpha),
                     Stage::PayoffRotation);
    }
    const std::size_t width = ac.value_register.size();
    for (std::size_t j = 0; j < width; ++j) {
      const int q = ac.value_register[width - 1 - j];
      ac.circuit.add(GateOp::controlled_rotation(sim::Axis::Y, {ac.flag, q}, ac.payoff_qubit,
                                                 4.0 * c * beta * std::ldexp(1.0, static_cast<int>(j))),
                     Stage::PayoffRotation);
    }
  }
  return ac;
}

double arithmetic_formula(const ArithmeticCircuit& ac, std::span<const double> joint) {
  if (joint.size() != (std::uint64_t{1} << ac.underlying_qubits)) {
    throw InvalidArgument("arithmetic_formula: joint distribution has the wrong size");
  }
  const double c = ac.c_tilde;
  const double span = ac.is_put ? ac.strike - ac.x0 : ac.x_max - ac.strike;
  if (!(span > 0.0)) return 0.5 - c;
  double sum = 0.0;
  for (std::uint64_t i = 0; i < joint.size(); ++i) {
    const double x = ac.value_at(i);
    const double gain = ac.is_put ? ac.strike - x : x - ac.strike;
    if (gain >= 0.0) sum += joint[i] * gain;
  }
  return 0.5 - c + 2.0 * c / span * sum;
}

double simulate_payoff_probability(const ArithmeticCircuit& ac, std::span<const double> joint) {
  const int nq = ac.circuit.num_qubits;
  if (nq > 63) throw InvalidArgument("simulation: too many qubits");
  if (joint.size() != (std::uint64_t{1} << ac.underlying_qubits)) {
    throw InvalidArgument("simulation: joint distribution has the wrong size");
  }
  const auto mask = [&](int q) { return std::uint64_t{1} << (nq - 1 - q); };
  const int shift = nq - ac.underlying_qubits;

  std::unordered_map<std::uint64_t, sim::Complex> state;
  for (std::uint64_t i = 0; i < joint.size(); ++i) {
    if (joint[i] < 0.0) throw InvalidArgument("simulation: negative probability");
    if (joint[i] > 0.0) state[i << shift] = std::sqrt(joint[i]);
  }
  for (const transpile::StagedGate& sg : ac.circuit.gates) {
    if (sg.stage == transpile::Stage::Loader) continue;  // amplitudes are injected
    const GateOp& g = sg.gate;
    const sim::Matrix2 m = sim::gate_matrix(g);
    const std::uint64_t tm = mask(g.target);
    std::uint64_t cm = 0;
    for (int c : g.controls) cm |= mask(c);
    std::unordered_map<std::uint64_t, sim::Complex> next;
    next.reserve(state.size() * 2);
    std::unordered_set<std::uint64_t> done;
    for (const auto& [key, amp] : state) {
      if ((key & cm) != cm) {
        next[key] += amp;
        continue;
      }
      const std::uint64_t base = key & ~tm;
      if (!done.insert(base).second) continue;
      const auto find = [&](std::uint64_t k) {
        const auto it = state.find(k);
        return it == state.end() ? sim::Complex{} : it->second;
      };
      const sim::Complex a0 = find(base);
      const sim::Complex a1 = find(base | tm);
      const sim::Complex b0 = m[0] * a0 + m[1] * a1;
      const sim::Complex b1 = m[2] * a0 + m[3] * a1;
      if (std::norm(b0) > 1e-30) next[base] += b0;
      if (std::norm(b1) > 1e-30) next[base | tm] += b1;
    }
    state = std::move(next);
  }
  double p = 0.0;
  const std::uint64_t pm = mask(ac.payoff_qubit);
  for (const auto& [key, amp] : state) {
    if (key & pm) p += std::norm(amp);
  }
  return p;
}

double expected_payoff_from_probability(const ArithmeticCircuit& ac, double probability) {
  const double span = ac.is_put ? ac.strike - ac.x0 : ac.x_max - ac.strike;
  if (!(span > 0.0)) return 0.0;
  return (probability - 0.5 + ac.c_tilde) * span / (2.0 * ac.c_tilde);
}

double sin_squared_residual(double c_tilde) { return 2.0 / 3.0 * c_tilde * c_tilde * c_tilde; }

}  // namespace cpqc::finance
