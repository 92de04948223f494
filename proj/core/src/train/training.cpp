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

#include "cpqc/train/training.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cpqc/common/errors.hpp"
#include "cpqc/ir/text_format.hpp"

namespace cpqc::train {
namespace {

void check_problem(const CompiledCircuit& model, std::span<const double> theta,
                   const TrainingProblem& problem) {
  problem.validate();
  if (problem.features.front().size() != static_cast<std::size_t>(model.num_features())) {
    throw InvalidArgument("training problem has " +
                          std::to_string(problem.features.front().size()) +
                          " features, circuit expects " + std::to_string(model.num_features()));
  }
  if (theta.size() != static_cast<std::size_t>(model.num_params())) {
    throw InvalidArgument("theta has " + std::to_string(theta.size()) + " entries, circuit has " +
                          std::to_string(model.num_params()) + " slots");
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0)) throw InvalidArgument("optimizer.learning_rate must be > 0");
  if (!(decay > 0.0 && decay < 1.0)) throw InvalidArgument("optimizer.decay must be in (0, 1)");
  if (!(epsilon > 0.0)) throw InvalidArgument("optimizer.epsilon must be > 0");
  if (max_steps < 1) throw InvalidArgument("optimizer.max_steps must be >= 1");
  if (!(fd_step > 0.0)) throw InvalidArgument("optimizer.fd_step must be > 0");
  if (!(gradient_tolerance >= 0.0)) {
    throw InvalidArgument("optimizer.gradient_tolerance must be >= 0");
  }
}

double cost(const CompiledCircuit& model, std::span<const double> theta,
            const TrainingProblem& problem) {
  check_problem(model, theta, problem);
  double total = 0.0;
  for (std::size_t j = 0; j < problem.size(); ++j) {
    const double r = model.evaluate(problem.features[j], theta) - problem.labels[j];
    total += r * r;
  }
  return total / static_cast<double>(problem.size());
}

double cost(const ir::Circuit& circuit, std::span<const double> theta,
            const TrainingProblem& problem) {
  return cost(CompiledCircuit(circuit, problem.observable), theta, problem);
}

std::vector<double> gradient(const CompiledCircuit& model, std::span<const double> theta,
                             const TrainingProblem& problem, GradientMethod method,
                             double fd_step) {
  check_problem(model, theta, problem);
  const std::size_t q_count = theta.size();
  const std::size_t j_count = problem.size();
  std::vector<double> residual(j_count);
  for (std::size_t j = 0; j < j_count; ++j) {
    residual[j] = model.evaluate(problem.features[j], theta) - problem.labels[j];
  }
  std::vector<double> grad(q_count, 0.0);
  std::vector<double> shifted(theta.begin(), theta.end());
  for (std::size_t q = 0; q < q_count; ++q) {
    const bool shift_rule =
        method == GradientMethod::ParameterShift && model.shiftable(static_cast<int>(q));
    const double h = shift_rule ? std::numbers::pi / 2.0 : fd_step;
    const double scale = shift_rule ? 0.5 : 1.0 / (2.0 * fd_step);
    double total = 0.0;
    for (std::size_t j = 0; j < j_count; ++j) {
      shifted[q] = theta[q] + h;
      const double plus = model.evaluate(problem.features[j], shifted);
      shifted[q] = theta[q] - h;
      const double minus = model.evaluate(problem.features[j], shifted);
      total += residual[j] * (plus - minus) * scale;
    }
    shifted[q] = theta[q];
    grad[q] = 2.0 * total / static_cast<double>(j_count);
  }
  return grad;
}

std::vector<double> gradient(const ir::Circuit& circuit, std::span<const double> theta,
                             const TrainingProblem& problem, GradientMethod method,
                             double fd_step) {
  return gradient(CompiledCircuit(circuit, problem.observable), theta, problem, method, fd_step);
}

OptimizeResult optimize(const ir::Circuit& circuit, std::span<const double> theta0,
                        const TrainingProblem& problem, const OptimizerConfig& config) {
  config.validate();
  const CompiledCircuit model(circuit, problem.observable);
  std::vector<double> theta(theta0.begin(), theta0.end());
  OptimizeResult result;
  result.theta = theta;
  result.cost = cost(model, theta, problem);
  result.history.push_back(result.cost);
  if (!std::isfinite(result.cost)) {
    result.diverged = true;
    return result;
  }
  std::vector<double> mean_square(theta.size(), 0.0);
  for (int step = 0; step < config.max_steps && !theta.empty(); ++step) {
    const auto grad =
        gradient(model, theta, problem, config.gradient_method, config.fd_step);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::abs(g));
    if (!std::isfinite(gmax)) {
      result.diverged = true;
      break;
    }
    if (gmax < config.gradient_tolerance) break;
    for (std::size_t q = 0; q < theta.size(); ++q) {
      mean_square[q] = config.decay * mean_square[q] + (1.0 - config.decay) * grad[q] * grad[q];
      theta[q] -= config.learning_rate * grad[q] / (std::sqrt(mean_square[q]) + config.epsilon);
    }
    const double c = cost(model, theta, problem);
    result.history.push_back(c);
    if (!std::isfinite(c)) {
      result.diverged = true;
      break;
    }
    if (c < result.cost) {
      result.cost = c;
      result.theta = theta;
    }
  }
  return result;
}

std::string history_csv(std::span<const double> history) {
  std::string out = "step,cost\n";
  for (std::size_t i = 0; i < history.size(); ++i) {
    out += std::to_string(i) + "," + ir::format_double(history[i]) + "\n";
  }
  return out;
}

}  // namespace cpqc::train
