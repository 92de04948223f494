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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cpqc/common/errors.hpp"
#include "cpqc/common/rng.hpp"
#include "cpqc/cond/conditional.hpp"
#include "cpqc/cond/text_format.hpp"
#include "cpqc/finance/pricing.hpp"
#include "cpqc/ir/fixtures.hpp"
#include "cpqc/ir/text_format.hpp"
#include "cpqc/search/pool.hpp"
#include "cpqc/search/structure_learning.hpp"
#include "cpqc/train/training.hpp"
#include "cpqc/transpile/report.hpp"

namespace cpqc::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string convention_name(finance::GridConvention c) {
  return c == finance::GridConvention::HalfTurn ? "half_turn" : "dyadic";
}

finance::GridConvention parse_convention(const std::string& name) {
  if (name == "half_turn") return finance::GridConvention::HalfTurn;
  if (name == "dyadic") return finance::GridConvention::Dyadic;
  throw ConfigError("grid.convention: unknown convention '" + name + "'");
}

fs::path output_path(const RunConfig& config, const std::string& name) {
  fs::create_directories(config.out);
  return fs::path(config.out) / name;
}

void write(const RunConfig& config, const std::string& name, const std::string& contents) {
  ir::write_text_file(output_path(config, name).string(), contents);
}

ir::Fixture load_source(const CircuitSource& source) {
  if (!source.path.empty() && !source.fixture.empty()) {
    throw ConfigError("--circuit and --fixture are mutually exclusive");
  }
  if (!source.path.empty()) {
    ir::Document doc = ir::deserialize(ir::read_text_file(source.path));
    if (doc.theta.empty()) doc.theta.assign(static_cast<std::size_t>(doc.circuit.num_params), 0.0);
    return {source.path, std::move(doc.circuit), std::move(doc.theta)};
  }
  return ir::load_fixture(source.fixture.empty() ? "call_fig3" : source.fixture);
}

cond::ControlLayout layout_for(const RunConfig& config, const ir::Circuit& circuit,
                               std::vector<int> sizes) {
  if (sizes.empty()) {
    sizes = config.grid_qubits;
    if (static_cast<int>(sizes.size()) != circuit.num_features) {
      sizes.assign(static_cast<std::size_t>(circuit.num_features), 3);
    }
  }
  if (static_cast<int>(sizes.size()) != circuit.num_features) {
    throw ConfigError("--sizes: circuit has " + std::to_string(circuit.num_features) +
                      " features, got " + std::to_string(sizes.size()) + " sizes");
  }
  try {
    return config.convention == finance::GridConvention::HalfTurn
               ? cond::ControlLayout::half_turn(sizes, circuit.num_qubits)
               : cond::ControlLayout::dyadic(sizes, circuit.num_qubits);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("--sizes: ") + e.what());
  }
}

json payoff_json(const finance::PayoffSpec& spec) {
  return json{{"kind", finance::payoff_kind_name(spec.kind)},
              {"strike", spec.strike},
              {"weights", spec.weights}};
}

transpile::ResourceReport cpqc_report(const ir::Circuit& circuit, const std::vector<double>& theta,
                                      const cond::ControlLayout& layout) {
  const cond::ConditionalCircuit cc = cond::make_conditional(circuit, layout);
  return transpile::report(
      transpile::from_circuit(cc.circuit, {{}, theta}, layout.control_qubits()));
}

}  // namespace

int cmd_train(const RunConfig& config, std::ostream& out) {
  config.validate();
  const finance::FinanceProblem fp =
      finance::build_training_problem(config.payoff, config.grids(), config.weight_qubits);
  const int features = static_cast<int>(fp.problem.features.front().size());
  const ir::Circuit start = search::initial_circuit(config.model_qubits, features);
  const std::vector<double> theta0(static_cast<std::size_t>(start.num_params),
                                   config.initial_theta);
  const search::BlockPool pool = search::BlockPool::standard(features, config.native_pool);

  search::GeneticConfig genetic = config.genetic;
  genetic.seed = config.seed;
  genetic.search.seed = config.seed;
  const search::Member seed_member{start, theta0, train::cost(start, theta0, fp.problem)};
  const search::GeneticResult result =
      search::genetic_learn({seed_member}, fp.problem, pool, genetic);

  write(config, "model.cpqc", ir::serialize(result.best.circuit, result.best.theta));
  write(config, "lineage.csv", search::lineage_csv(result.lineage));
  json summary{
      {"circuit", "model.cpqc"},
      {"payoff", payoff_json(config.payoff)},
      {"grid",
       {{"qubits", config.grid_qubits},
        {"convention", convention_name(config.convention)},
        {"weight_qubits", config.weight_qubits}}},
      {"label_scale", {{"a", fp.problem.scale.a}, {"b", fp.problem.scale.b}}},
      {"cost", result.best.cost},
      {"initial_cost", seed_member.cost},
      {"best_initial_cost", result.best_initial_cost},
      {"seed", config.seed},
      {"search",
       {{"generations", genetic.generations},
        {"population", genetic.population},
        {"iterations", genetic.search.iterations}}},
  };
  write(config, "model.json", summary.dump(2) + "\n");
  out << "trained " << fp.problem.size() << " samples: cost " << ir::format_double(seed_member.cost)
      << " -> " << ir::format_double(result.best.cost) << " (" << result.best.circuit.block_count()
      << " blocks, " << result.best.circuit.num_params << " parameters)\n";
  return 0;
}

int cmd_conditional(const RunConfig& config, const CircuitSource& source,
                    const std::vector<int>& sizes, std::ostream& out) {
  const ir::Fixture model = load_source(source);
  const cond::ControlLayout layout = layout_for(config, model.circuit, sizes);
  const cond::ConditionalCircuit cc = cond::make_conditional(model.circuit, layout);
  write(config, "conditional.cpqc", cond::serialize_conditional(cc, model.theta));
  const transpile::ResourceReport r = cpqc_report(model.circuit, model.theta, layout);
  json report{{"source", model.name},
              {"control_qubits", layout.control_qubits()},
              {"controlled_rotations", cc.controlled_rotation_count()},
              {"cnot", r.cnot_count},
              {"depth", r.depth},
              {"single_qubit", r.single_qubit_count}};
  write(config, "conditional_report.json", report.dump(2) + "\n");
  out << report.dump() << "\n";
  return 0;
}

int cmd_verify(const RunConfig& config, const VerifyOptions& options, std::ostream& out) {
  if (options.trials < 1) throw ConfigError("--trials must be >= 1");
  const ir::Fixture model = load_source(options.source);
  const cond::ControlLayout layout = layout_for(config, model.circuit, options.sizes);
  const cond::ConditionalCircuit cc = cond::make_conditional(model.circuit, layout);
  Rng rng(config.seed);
  double worst = 0.0;
  int failures = 0;
  for (int t = 0; t < options.trials; ++t) {
    std::vector<double> theta(static_cast<std::size_t>(model.circuit.num_params));
    for (double& v : theta) v = std::numbers::pi * (2.0 * rng.uniform() - 1.0);
    cond::ProductDistribution dist;
    for (int k = 0; k < layout.num_features(); ++k) {
      std::vector<double> p(layout.grid_size(k));
      double total = 0.0;
      for (double& v : p) total += v = -std::log(1.0 - rng.uniform());
      for (double& v : p) v /= total;
      dist.registers.push_back(std::move(p));
    }
    const cond::PropositionReport r =
        cond::verify_proposition(model.circuit, cc, dist, theta, options.tolerance);
    worst = std::max(worst, std::isfinite(r.delta) ? r.delta : INFINITY);
    failures += !r.pass;
  }
  out << (failures == 0 ? "PASS" : "FAIL") << " " << model.name << ": " << options.trials
      << " trials, " << failures << " failures, worst |delta| " << ir::format_double(worst)
      << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_price(const RunConfig& config, const PriceOptions& options, std::ostream& out) {
  config.validate();
  finance::PricingTask task{config.payoff, config.grids(), config.market, config.weight,
                            config.weight_qubits};

  std::optional<finance::TrainedModel> model;
  if (!options.model.empty()) {
    json meta;
    try {
      meta = json::parse(ir::read_text_file(options.model));
      const fs::path circuit_path =
          fs::path(options.model).parent_path() / meta.at("circuit").get<std::string>();
      ir::Document doc = ir::deserialize(ir::read_text_file(circuit_path.string()));
      if (parse_convention(meta.at("grid").at("convention").get<std::string>()) != config.convention) {
        throw ConfigError("grid.convention differs from the model's training grid");
      }
      model = finance::TrainedModel{std::move(doc.circuit), std::move(doc.theta),
                                    {meta.at("label_scale").at("a").get<double>(),
                                     meta.at("label_scale").at("b").get<double>()}};
    } catch (const json::exception& e) {
      throw ParseError(std::string("model file: ") + e.what(), 1, 1);
    }
  }

  std::vector<std::string> backends;
  if (options.backends.empty()) {
    backends.push_back("exact");
    if (config.payoff.kind != finance::PayoffKind::BasketVariable) backends.push_back("arithmetic");
    if (model) backends.push_back("cpqc");
  } else {
    std::stringstream ss(options.backends);
    for (std::string b; std::getline(ss, b, ',');) backends.push_back(b);
  }

  const finance::PriceResult reference = finance::price_exact(task);
  int n = 0;
  for (int q : config.grid_qubits) n += q;
  std::string lines;
  for (const std::string& b : backends) {
    finance::PriceResult r;
    if (b == "exact") {
      r = reference;
    } else if (b == "arithmetic") {
      r = finance::price_arithmetic(task, config.arithmetic);
    } else if (b == "cpqc") {
      if (!model) throw ConfigError("--backend cpqc needs --model");
      r = finance::price_cpqc(task, *model);
    } else {
      throw ConfigError("--backend: unknown backend '" + b + "'");
    }
    json record{{"spec", finance::payoff_kind_name(config.payoff.kind)},
                {"n", n},
                {"backend", b},
                {"price", r.price},
                {"reference_price", reference.price},
                {"abs_error", std::abs(r.price - reference.price)}};
    lines += record.dump() + "\n";
    out << b << ": " << r.trace << "\n";
  }
  if (config.payoff.kind == finance::PayoffKind::Call ||
      config.payoff.kind == finance::PayoffKind::Put) {
    const auto& m = config.market;
    const double bs =
        config.payoff.kind == finance::PayoffKind::Call
            ? finance::black_scholes_call(m.spot, config.payoff.strike, m.rate, m.volatility, m.maturity)
            : finance::black_scholes_put(m.spot, config.payoff.strike, m.rate, m.volatility, m.maturity);
    out << "black_scholes: " << ir::format_double(bs) << "\n";
  }
  write(config, "prices.jsonl", lines);
  out << lines;
  return 0;
}

int cmd_benchmark(const RunConfig& config, std::ostream& out) {
  config.validate();
  const auto sweep = [&](const std::vector<int>& ns, const std::string& fixture,
                         const finance::PayoffSpec& spec,
                         const finance::ArithmeticOptions& options) {
    const bool basket = spec.kind == finance::PayoffKind::BasketFixed;
    const ir::Fixture f = ir::load_fixture(fixture);
    const auto cpqc = transpile::scaling_sweep(
        [&](int n) {
          const std::vector<int> sizes =
              basket ? std::vector<int>{n / 2, n - n / 2} : std::vector<int>{n};
          const cond::ControlLayout layout =
              config.convention == finance::GridConvention::HalfTurn
                  ? cond::ControlLayout::half_turn(sizes, f.circuit.num_qubits)
                  : cond::ControlLayout::dyadic(sizes, f.circuit.num_qubits);
          const cond::ConditionalCircuit cc = cond::make_conditional(f.circuit, layout);
          return transpile::from_circuit(cc.circuit, {{}, f.theta}, layout.control_qubits());
        },
        ns, "cpqc");
    const auto arithmetic = transpile::scaling_sweep(
        [&](int n) {
          std::vector<finance::PriceGrid> grids;
          if (basket) {
            grids.assign(2, finance::PriceGrid::standard(config.market, n / 2));
          } else {
            grids.push_back(finance::PriceGrid::standard(config.market, n));
          }
          return finance::build_arithmetic_circuit(spec, grids, options).circuit;
        },
        ns, "arithmetic");
    std::vector<transpile::SweepRow> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      rows.push_back(cpqc[i]);
      rows.push_back(arithmetic[i]);
    }
    return transpile::sweep_csv(rows);
  };

  std::vector<int> vanilla_n;
  std::vector<int> basket_n;
  for (int n = config.bench_n_min; n <= config.bench_n_max; ++n) {
    vanilla_n.push_back(n);
    if (n % 2 == 0) basket_n.push_back(n);
  }

  // Strikes and weights come from the payoff section when it describes the
  // matching product; otherwise the reference setup (K = 100, w = (2/3, 1/3)).
  const bool vanilla_config = config.payoff.kind == finance::PayoffKind::Call;
  const bool basket_config = config.payoff.kind == finance::PayoffKind::BasketFixed &&
                             config.payoff.weights.size() == 2;
  const finance::PayoffSpec call{finance::PayoffKind::Call,
                                 vanilla_config ? config.payoff.strike : 100.0, {}};
  finance::ArithmeticOptions vanilla_options = config.arithmetic;
  vanilla_options.integer_weights.clear();

  finance::PayoffSpec basket{finance::PayoffKind::BasketFixed, 100.0, {2.0 / 3.0, 1.0 / 3.0}};
  finance::ArithmeticOptions basket_options = config.arithmetic;
  if (basket_config) {
    basket = config.payoff;
  } else {
    basket_options.integer_weights = {2, 1};
  }

  const std::string vanilla_csv = sweep(vanilla_n, "call_fig3", call, vanilla_options);
  const std::string basket_csv = sweep(basket_n, "basket_figA2", basket, basket_options);
  write(config, "benchmark_vanilla.csv", vanilla_csv);
  write(config, "benchmark_basket.csv", basket_csv);
  out << "wrote " << vanilla_n.size() * 2 << " vanilla rows and " << basket_n.size() * 2
      << " basket rows to " << config.out << "\n";
  return 0;
}

}  // namespace cpqc::cli
