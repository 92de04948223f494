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

#include "app.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "cpqc/common/errors.hpp"

namespace cpqc::cli {
namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool paper_scale = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "Config file (sectioned key = value)");
  cmd->add_option("--seed", flags.seed, "Master seed (overrides run.seed)");
  cmd->add_option("--out", flags.out, "Output directory (overrides run.out)");
  cmd->add_flag("--paper-scale", flags.paper_scale,
                "Use 20 generations, population 48 and 20 iterations");
}

RunConfig resolve(const CommonFlags& flags) {
  RunConfig config = flags.config.empty() ? RunConfig{} : load_config(flags.config);
  if (flags.seed) config.seed = *flags.seed;
  if (!flags.out.empty()) config.out = flags.out;
  if (flags.paper_scale) config.apply_paper_scale();
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional parameterized quantum circuits for option pricing", "cpqc"};
  app.require_subcommand(1);

  CommonFlags flags;
  CircuitSource source;
  std::string sizes;
  VerifyOptions verify;
  PriceOptions price;

  auto* train = app.add_subcommand("train", "Search for a PQC fitting the configured payoff");
  auto* conditional = app.add_subcommand("conditional", "Build the CPQC of a trained circuit");
  auto* verify_cmd = app.add_subcommand("verify", "Check the encoding-equality identity");
  auto* price_cmd = app.add_subcommand("price", "Price the configured option");
  auto* benchmark = app.add_subcommand("benchmark", "Write CNOT and depth scaling tables");
  for (auto* cmd : {train, conditional, verify_cmd, price_cmd, benchmark}) add_common(cmd, flags);
  for (auto* cmd : {conditional, verify_cmd}) {
    cmd->add_option("--circuit", source.path, "Circuit file (.cpqc)");
    cmd->add_option("--fixture", source.fixture, "Published circuit name");
    cmd->add_option("--sizes", sizes, "Register sizes, comma separated");
  }
  verify_cmd->add_option("--trials", verify.trials, "Random instances to check");
  price_cmd->add_option("--model", price.model, "model.json written by train");
  price_cmd->add_option("--backend", price.backends, "exact, cpqc, arithmetic (comma separated)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cpqc: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    const RunConfig config = resolve(flags);
    const std::vector<int> size_list =
        sizes.empty() ? std::vector<int>{} : parse_int_list(sizes, "--sizes");
    if (train->parsed()) return cmd_train(config, out);
    if (conditional->parsed()) return cmd_conditional(config, source, size_list, out);
    if (verify_cmd->parsed()) {
      verify.source = source;
      verify.sizes = size_list;
      return cmd_verify(config, verify, out);
    }
    if (price_cmd->parsed()) return cmd_price(config, price, out);
    return cmd_benchmark(config, out);
  } catch (const ConfigError& e) {
    err << "cpqc: config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "cpqc: config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DivergenceError& e) {
    err << "cpqc: training diverged: " << e.what() << "\n";
    return kDiverged;
  } catch (const ParseError& e) {
    err << "cpqc: parse error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "cpqc: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace cpqc::cli
