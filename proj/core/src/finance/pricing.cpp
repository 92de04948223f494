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

#include "cpqc/finance/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"
#include "cpqc/cond/conditional.hpp"
#include "cpqc/ir/text_format.hpp"

namespace cpqc::finance {
namespace {

std::uint64_t weight_index(const PricingTask& task) {
  const cond::Register reg = weight_register(task.weight_qubits);
  const double scaled = task.weight / reg.step;
  const double r = std::round(scaled);
  if (std::abs(scaled - r) > 1e-9 || r < 0.0 || r >= std::ldexp(1.0, reg.size)) {
    throw InvalidArgument("pricing.weight must lie on the grid j / " +
                          std::to_string(1 << reg.size));
  }
  return static_cast<std::uint64_t>(r);
}

cond::ProductDistribution product(const PricingTask& task) {
  cond::ProductDistribution d{task.distributions()};
  if (task.spec.kind == PayoffKind::BasketVariable) {
    std::vector<double> w(std::size_t{1} << task.weight_qubits, 0.0);
    w[weight_index(task)] = 1.0;
    d.registers.push_back(std::move(w));
  }
  return d;
}

std::string fmt(double v) { return ir::format_double(v); }

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Exact: return "exact";
    case Backend::Cpqc: return "cpqc";
    case Backend::Arithmetic: return "arithmetic";
  }
  return "exact";
}

void PricingTask::validate() const {
  spec.validate();
  market.validate();
  if (grids.size() != static_cast<std::size_t>(spec.underlyings())) {
    throw InvalidArgument("pricing: expected " + std::to_string(spec.underlyings()) +
                          " price grids, got " + std::to_string(grids.size()));
  }
  for (const PriceGrid& g : grids) g.validate();
  if (spec.kind == PayoffKind::BasketVariable) weight_index(*this);
}

std::vector<std::vector<double>> PricingTask::distributions() const {
  std::vector<std::vector<double>> out;
  for (const PriceGrid& g : grids) out.push_back(discretize(market, g));
  return out;
}

PriceResult price_exact(const PricingTask& task) {
  task.validate();
  const FinanceProblem fp = build_training_problem(task.spec, task.grids, task.weight_qubits);
  const cond::ProductDistribution dist = product(task);
  const std::vector<double> joint = dist.joint();
  double expected = 0.0;
  for (std::size_t i = 0; i < joint.size(); ++i) expected += joint[i] * fp.payoffs[i];
  PriceResult r;
  r.backend = Backend::Exact;
  r.raw = expected;
  r.expected_payoff = expected;
  r.discount = task.market.discount();
  r.price = r.discount * expected;
  r.trace = "E[f]=" + fmt(expected) + "; price=E[f]*" + fmt(r.discount);
  return r;
}

PriceResult price_cpqc(const PricingTask& task, const TrainedModel& model) {
  task.validate();
  model.circuit.validate();
  if (model.theta.size() != static_cast<std::size_t>(model.circuit.num_params)) {
    throw InvalidArgument("pricing: model has " + std::to_string(model.theta.size()) +
                          " parameters, circuit needs " +
                          std::to_string(model.circuit.num_params));
  }
  if (model.scale.a == 0.0 || !std::isfinite(model.scale.a)) {
    throw InvalidArgument("pricing: model label scale is degenerate");
  }
  const cond::ControlLayout layout =
      finance_layout(task.spec, task.grids, model.circuit.num_qubits, task.weight_qubits);
  const cond::ConditionalCircuit cc = cond::make_conditional(model.circuit, layout);
  const double raw = cond::conditional_expectation(cc, product(task), model.theta);
  PriceResult r;
  r.backend = Backend::Cpqc;
  r.raw = raw;
  r.expected_payoff = model.scale.invert(raw);
  r.discount = task.market.discount();
  r.price = r.discount * r.expected_payoff;
  const std::string shift = model.scale.b < 0.0 ? "+" + fmt(-model.scale.b) : "-" + fmt(model.scale.b);
  r.trace = "<M>=" + fmt(raw) + "; E[f]=(<M>" + shift + ")/" + fmt(model.scale.a) +
            "=" + fmt(r.expected_payoff) + "; price=E[f]*" + fmt(r.discount);
  return r;
}

PriceResult price_arithmetic(const PricingTask& task, const ArithmeticOptions& options) {
  task.validate();
  const ArithmeticCircuit ac = build_arithmetic_circuit(task.spec, task.grids, options);
  const std::vector<double> joint = cond::ProductDistribution{task.distributions()}.joint();
  const double p = simulate_payoff_probability(ac, joint);
  PriceResult r;
  r.backend = Backend::Arithmetic;
  r.raw = p;
  r.expected_payoff = expected_payoff_from_probability(ac, p);
  r.discount = task.market.discount();
  r.price = r.discount * r.expected_payoff;
  const double span = ac.is_put ? ac.strike - ac.x0 : ac.x_max - ac.strike;
  r.trace = "P1=" + fmt(p) + "; E[f]=(P1-1/2+" + fmt(ac.c_tilde) + ")*" + fmt(span) + "/(2*" +
            fmt(ac.c_tilde) + ")=" + fmt(r.expected_payoff) + "; price=E[f]*" + fmt(r.discount);
  return r;
}

double max_model_error(const PricingTask& task, const TrainedModel& model) {
  task.validate();
  const FinanceProblem fp = build_training_problem(task.spec, task.grids, task.weight_qubits);
  const train::CompiledCircuit compiled(model.circuit);
  double worst = 0.0;
  for (std::size_t i = 0; i < fp.payoffs.size(); ++i) {
    const double predicted = model.scale.invert(compiled.evaluate(fp.problem.features[i], model.theta));
    worst = std::max(worst, std::abs(predicted - fp.payoffs[i]));
  }
  return worst;
}

}  // namespace cpqc::finance
