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

#include <span>
#include <string>
#include <vector>

#include "cpqc/train/model.hpp"

namespace cpqc::train {

enum class GradientMethod { ParameterShift, CentralDifference };

struct OptimizerConfig {
  double learning_rate = 0.01;
  double decay = 0.9;
  double epsilon = 1e-8;
  int max_steps = 200;
  GradientMethod gradient_method = GradientMethod::ParameterShift;
  /// Step for central differences, also used for slots the shift rule
  /// does not cover.
  double fd_step = 1e-5;
  /// Stop once the gradient's max-norm falls below this.
  double gradient_tolerance = 1e-10;

  /// Throws InvalidArgument naming the first bad field.
  void validate() const;
};

/// (1/J) sum_j (f_U(x_j, theta) - y_j)^2 over scaled labels.
double cost(const CompiledCircuit& model, std::span<const double> theta,
            const TrainingProblem& problem);
double cost(const ir::Circuit& circuit, std::span<const double> theta,
            const TrainingProblem& problem);

/// d cost / d theta. Parameter shift uses f(theta_q + pi/2) - f(theta_q - pi/2)
/// halved; controlled trainable rotations fall back to central differences.
std::vector<double> gradient(const CompiledCircuit& model, std::span<const double> theta,
                             const TrainingProblem& problem,
                             GradientMethod method = GradientMethod::ParameterShift,
                             double fd_step = 1e-5);
std::vector<double> gradient(const ir::Circuit& circuit, std::span<const double> theta,
                             const TrainingProblem& problem,
                             GradientMethod method = GradientMethod::ParameterShift,
                             double fd_step = 1e-5);

struct OptimizeResult {
  std::vector<double> theta;
  double cost = 0.0;
  /// Cost at each visited iterate, starting with theta0.
  std::vector<double> history;
  bool diverged = false;
};

/// RMSProp. Returns the best iterate seen, so result.cost <= cost(theta0).
/// A non-finite cost stops the run with `diverged` set and the best finite
/// iterate returned.
OptimizeResult optimize(const ir::Circuit& circuit, std::span<const double> theta0,
                        const TrainingProblem& problem, const OptimizerConfig& config);

/// "step,cost" rows.
std::string history_csv(std::span<const double> history);

}  // namespace cpqc::train
