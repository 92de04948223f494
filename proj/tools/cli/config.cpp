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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cpqc/common/errors.hpp"
#include "cpqc/ir/text_format.hpp"

namespace cpqc::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& raw, const std::string& field) {
  const std::string value = trim(raw);
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(field + ": cannot parse '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& raw, const std::string& field) {
  const std::string v = trim(raw);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(field + ": expected true or false, got '" + v + "'");
}

std::vector<double> parse_double_list(const std::string& value, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<double>(item, field));
  return out;
}

finance::PayoffKind parse_kind(const std::string& v) {
  for (auto k : {finance::PayoffKind::Call, finance::PayoffKind::Put,
                 finance::PayoffKind::BasketFixed, finance::PayoffKind::BasketVariable}) {
    if (v == finance::payoff_kind_name(k)) return k;
  }
  throw ConfigError("payoff.kind: unknown kind '" + v + "'");
}

using Setter = void (*)(RunConfig&, const std::string&, const std::string&);

struct Key {
  const char* name;
  Setter set;
};

#define CPQC_KEY(section, key, body)                                              \
  Key {                                                                           \
    section "." key, [](RunConfig& c, const std::string& v, const std::string& f) { \
      (void)f;                                                                    \
      body;                                                                       \
    }                                                                             \
  }

const std::vector<Key>& keys() {
  static const std::vector<Key> table = {
      CPQC_KEY("run", "seed", c.seed = parse_number<std::uint64_t>(v, f)),
      CPQC_KEY("run", "out", c.out = trim(v)),
      CPQC_KEY("payoff", "kind", c.payoff.kind = parse_kind(trim(v))),
      CPQC_KEY("payoff", "strike", c.payoff.strike = parse_number<double>(v, f)),
      CPQC_KEY("payoff", "weights", c.payoff.weights = parse_double_list(v, f)),
      CPQC_KEY("market", "spot", c.market.spot = parse_number<double>(v, f)),
      CPQC_KEY("market", "volatility", c.market.volatility = parse_number<double>(v, f)),
      CPQC_KEY("market", "rate", c.market.rate = parse_number<double>(v, f)),
      CPQC_KEY("market", "maturity", c.market.maturity = parse_number<double>(v, f)),
      CPQC_KEY("market", "distribution", {
        const std::string d = trim(v);
        if (d == "lognormal") {
          c.market.family = finance::DistributionFamily::Lognormal;
        } else if (d == "uniform") {
          c.market.family = finance::DistributionFamily::Uniform;
        } else if (d == "custom") {
          c.market.family = finance::DistributionFamily::Custom;
        } else {
          throw ConfigError(f + ": unknown distribution '" + d + "'");
        }
      }),
      CPQC_KEY("market", "custom", c.market.custom = parse_double_list(v, f)),
      CPQC_KEY("grid", "qubits", c.grid_qubits = parse_int_list(v, f)),
      CPQC_KEY("grid", "convention", {
        const std::string d = trim(v);
        if (d == "half_turn") {
          c.convention = finance::GridConvention::HalfTurn;
        } else if (d == "dyadic") {
          c.convention = finance::GridConvention::Dyadic;
        } else {
          throw ConfigError(f + ": expected half_turn or dyadic, got '" + d + "'");
        }
      }),
      CPQC_KEY("grid", "weight_qubits", c.weight_qubits = parse_number<int>(v, f)),
      CPQC_KEY("grid", "weight", c.weight = parse_number<double>(v, f)),
      CPQC_KEY("model", "qubits", c.model_qubits = parse_number<int>(v, f)),
      CPQC_KEY("model", "native_pool", c.native_pool = parse_bool(v, f)),
      CPQC_KEY("model", "initial_theta", c.initial_theta = parse_number<double>(v, f)),
      CPQC_KEY("search", "generations", c.genetic.generations = parse_number<int>(v, f)),
      CPQC_KEY("search", "population", c.genetic.population = parse_number<int>(v, f)),
      CPQC_KEY("search", "iterations", c.genetic.search.iterations = parse_number<int>(v, f)),
      CPQC_KEY("search", "beta", c.genetic.search.beta = parse_number<double>(v, f)),
      CPQC_KEY("search", "rho_max", c.genetic.search.rho_max = parse_number<double>(v, f)),
      CPQC_KEY("search", "protect", c.genetic.search.protect = parse_bool(v, f)),
      CPQC_KEY("search", "depth_penalty",
               c.genetic.search.depth_penalty = parse_number<double>(v, f)),
      CPQC_KEY("search", "cnot_penalty",
               c.genetic.search.cnot_penalty = parse_number<double>(v, f)),
      CPQC_KEY("optimizer", "learning_rate",
               c.genetic.search.optimizer.learning_rate = parse_number<double>(v, f)),
      CPQC_KEY("optimizer", "decay", c.genetic.search.optimizer.decay = parse_number<double>(v, f)),
      CPQC_KEY("optimizer", "epsilon",
               c.genetic.search.optimizer.epsilon = parse_number<double>(v, f)),
      CPQC_KEY("optimizer", "max_steps",
               c.genetic.search.optimizer.max_steps = parse_number<int>(v, f)),
      CPQC_KEY("optimizer", "fd_step", c.genetic.search.optimizer.fd_step = parse_number<double>(v, f)),
      CPQC_KEY("optimizer", "gradient", {
        const std::string d = trim(v);
        if (d == "parameter_shift") {
          c.genetic.search.optimizer.gradient_method = train::GradientMethod::ParameterShift;
        } else if (d == "central_difference") {
          c.genetic.search.optimizer.gradient_method = train::GradientMethod::CentralDifference;
        } else {
          throw ConfigError(f + ": expected parameter_shift or central_difference");
        }
      }),
      CPQC_KEY("arithmetic", "c_tilde", c.arithmetic.c_tilde = parse_number<double>(v, f)),
      CPQC_KEY("arithmetic", "uncompute", c.arithmetic.uncompute = parse_bool(v, f)),
      CPQC_KEY("arithmetic", "integer_weights",
               c.arithmetic.integer_weights = parse_int_list(v, f)),
      CPQC_KEY("benchmark", "n_min", c.bench_n_min = parse_number<int>(v, f)),
      CPQC_KEY("benchmark", "n_max", c.bench_n_max = parse_number<int>(v, f)),
  };
  return table;
}

#undef CPQC_KEY

}  // namespace

std::vector<int> parse_int_list(const std::string& value, const std::string& field) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<int>(item, field));
  if (out.empty()) throw ConfigError(field + ": empty list");
  return out;
}

std::vector<finance::PriceGrid> RunConfig::grids() const {
  std::vector<finance::PriceGrid> out;
  for (int q : grid_qubits) out.push_back(finance::PriceGrid::standard(market, q, convention));
  return out;
}

void RunConfig::apply_paper_scale() {
  genetic.generations = 20;
  genetic.population = 48;
  genetic.search.iterations = 20;
}

void RunConfig::validate() const {
  // Library validators already name the offending field.
  const auto wrap = [](auto&& check) {
    try {
      check();
    } catch (const InvalidArgument& e) {
      throw ConfigError(e.what());
    }
  };
  wrap([&] { payoff.validate(); });
  wrap([&] { market.validate(); });
  if (static_cast<int>(grid_qubits.size()) != payoff.underlyings()) {
    throw ConfigError("grid.qubits: expected " + std::to_string(payoff.underlyings()) +
                      " entries for payoff." + std::string(finance::payoff_kind_name(payoff.kind)));
  }
  for (int q : grid_qubits) {
    if (q < 1 || q > 20) throw ConfigError("grid.qubits: each entry must lie in [1, 20]");
  }
  if (weight_qubits < 1 || weight_qubits > 8) {
    throw ConfigError("grid.weight_qubits must lie in [1, 8]");
  }
  if (model_qubits < 1 || model_qubits > 12) throw ConfigError("model.qubits must lie in [1, 12]");
  if (!std::isfinite(initial_theta)) throw ConfigError("model.initial_theta must be finite");
  wrap([&] { genetic.validate(); });
  if (!(arithmetic.c_tilde > 0.0 && arithmetic.c_tilde < 0.785)) {
    throw ConfigError("arithmetic.c_tilde must lie in (0, pi/4)");
  }
  if (bench_n_min < 1 || bench_n_max < bench_n_min || bench_n_max > 20) {
    throw ConfigError("benchmark.n_min/n_max must satisfy 1 <= n_min <= n_max <= 20");
  }
}

RunConfig parse_config(const std::string& text) {
  // The INI reader only knows whole-line comments; drop trailing " ; ..." too.
  std::string cleaned;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == ';' && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line.erase(i);
        break;
      }
    }
    cleaned += line + "\n";
  }
  boost::property_tree::ptree tree;
  std::istringstream in(cleaned);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config: " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  RunConfig config;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError(section + ": key outside a section");
    for (const auto& [key, value] : body) {
      const std::string field = section + "." + key;
      const auto& table = keys();
      const auto it = std::find_if(table.begin(), table.end(),
                                   [&](const Key& k) { return field == k.name; });
      if (it == table.end()) throw ConfigError(field + ": unknown setting");
      it->set(config, value.data(), field);
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::string text;
  try {
    text = ir::read_text_file(path);
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(text);
}

}  // namespace cpqc::cli
