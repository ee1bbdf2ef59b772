// Copyright 2026 The entmeter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entmeter/mixed_bounds.hpp"
#include "entmeter/monotones.hpp"
#include "entmeter/named_states.hpp"
#include "entmeter/oracles.hpp"
#include "entmeter/serialization.hpp"
#include "entmeter/source_sim.hpp"
#include "entmeter/tensor.hpp"

namespace entmeter::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kCertificationFailure = 3;

constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ENTMETER_SEED")) {
    try {
      size_t used = 0;
      const std::uint64_t v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("ENTMETER_SEED is not a valid integer");
    }
  }
  return kDefaultSeed;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedState load_state(const std::string& file, const std::string& named) {
  if (file.empty() == named.empty()) {
    throw std::invalid_argument("exactly one of --state/--named is required");
  }
  if (!named.empty()) {
    const NamedState builtin = make_named_state(named);
    return LoadedState{builtin.pure, builtin.density};
  }
  return read_state_json(slurp(file));
}

StateVector require_pure(const LoadedState& state) {
  if (!state.pure) {
    throw std::invalid_argument("a pure state is required here");
  }
  return *state.pure;
}

DensityOperator as_density(const LoadedState& state) {
  if (state.density) return *state.density;
  return pure_density(require_pure(state));
}

int cmd_pure(const std::string& file, const std::string& named,
             const std::string& monotone, bool raw, std::ostream& out) {
  const StateVector psi = require_pure(load_state(file, named));
  const MonotoneDefinition& defn = monotone_by_name(monotone);
  const double raw_value = raw_expectation(defn, psi);
  const double value =
      raw ? raw_value : evaluate_monotone(defn, psi);
  nlohmann::json doc = {{"monotone", monotone},
                        {"value", value},
                        {"raw_expectation", raw_value}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_bound(const std::string& file, const std::string& named, double alpha1,
              bool no_clamp, std::ostream& out) {
  const DensityOperator rho = as_density(load_state(file, named));
  BoundConfig config;
  config.alpha1 = alpha1;
  config.clamp = !no_clamp;
  const BoundReport report = concurrence_lower_bound(rho, config);
  out << write_bound_report_json(report) << "\n";
  return kOk;
}

int cmd_audit(double alpha1, std::int64_t trials, bool sign_flip,
              const std::optional<std::uint64_t>& seed, std::ostream& out,
              std::ostream& err) {
  BoundConfig config;
  config.alpha1 = alpha1;
  ObservableSpec spec = v_operator(config);
  if (sign_flip) {
    // Negative-control hook: flip a negative cross term so the operator
    // over-estimates and the inequality gets violated.
    spec.terms.at(1).coeff *= -1.0;
  }
  const MonotoneDefinition& defn = concurrence_definition();
  const auto monotone = [&defn](const StateVector& psi) {
    return defn.calibration *
           std::sqrt(std::max(0.0, raw_expectation(defn, psi)));
  };
  Rng rng(resolve_seed(seed));
  AuditReport report = inequality_audit(spec, monotone, defn.single_copy,
                                        trials, rng);
  report.alpha1 = alpha1;
  out << write_audit_report_json(report) << "\n";
  if (!report.certified) {
    err << "audit: " << report.violations
        << " violation(s), worst margin " << report.worst_margin << "\n";
    return kCertificationFailure;
  }
  return kOk;
}

int cmd_sweep_werner(int points, double alpha1, const std::string& format,
                     std::ostream& out) {
  if (points < 2) {
    throw std::invalid_argument("sweep-werner: --points must be >= 2");
  }
  BoundConfig config;
  config.alpha1 = alpha1;
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "p,bound,wootters,gap\n";
  for (int i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / (points - 1);
    const DensityOperator rho = werner_state(p);
    const BoundReport report = concurrence_lower_bound(rho, config);
    const double oracle = report.oracle.value();
    const double gap = oracle - report.bound;
    if (format == "json") {
      rows.push_back({{"p", p},
                      {"bound", report.bound},
                      {"wootters", oracle},
                      {"gap", gap}});
    } else {
      csv << p << "," << report.bound << "," << oracle << "," << gap << "\n";
    }
  }
  if (format == "json") {
    out << rows.dump(2) << "\n";
  } else {
    out << csv.str();
  }
  return kOk;
}

int cmd_experiment(const std::string& config_file,
                   const std::optional<std::uint64_t>& seed,
                   std::ostream& out) {
  ExperimentConfig config = read_experiment_config_json(slurp(config_file));
  if (seed) config.seed = *seed;
  const BoundReport report = run_experiment(config);
  out << write_bound_report_json(report) << "\n";
  return kOk;
}

int cmd_oracle(const std::string& file, const std::string& named,
               const std::string& which, const std::string& convention,
               std::ostream& out) {
  const LoadedState state = load_state(file, named);
  double value = 0.0;
  if (which == "wootters") {
    value = wootters_concurrence(as_density(state));
  } else if (which == "ckw-tangle") {
    value = ckw_tangle(require_pure(state));
  } else if (which == "schmidt-g") {
    const GConvention conv = convention == "geometric"
                                 ? GConvention::kSchmidtGeometric
                                 : GConvention::kNormalized;
    value = schmidt_g_concurrence(require_pure(state), conv);
  } else if (which == "negativity") {
    value = negativity(as_density(state), {0});
  } else if (which == "entropy") {
    value = reduced_entropy(require_pure(state), {0});
  } else {
    throw std::invalid_argument("oracle: unknown --which '" + which + "'");
  }
  nlohmann::json doc = {{"oracle", which}, {"value", value}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_state(const std::string& named, const std::string& out_file,
              std::ostream& out) {
  const NamedState state = make_named_state(named);
  const std::string doc = state.pure ? write_state_json(*state.pure)
                                     : write_state_json(*state.density);
  if (out_file.empty()) {
    out << doc << "\n";
  } else {
    std::ofstream f(out_file);
    if (!f) throw std::invalid_argument("cannot write '" + out_file + "'");
    f << doc << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"multi-copy entanglement estimation toolkit"};
  app.require_subcommand(1);

  std::string state_file, named, monotone = "concurrence";
  std::string which = "wootters", convention = "normalized";
  std::string format = "csv", config_file, out_file;
  double alpha1 = 0.5;
  int points = 101;
  std::int64_t trials = 10000;
  bool raw = false, no_clamp = false, sign_flip = false;
  std::optional<std::uint64_t> seed;

  CLI::App* pure = app.add_subcommand("pure", "pure-state monotone value");
  pure->add_option("--state", state_file, "state JSON file");
  pure->add_option("--named", named, "builtin state name");
  pure->add_option("--monotone", monotone, "monotone to evaluate")
      ->check(CLI::IsMember({"concurrence", "tangle", "gconc3", "gconc4"}));
  pure->add_flag("--raw", raw, "report the bare expectation as the value");

  CLI::App* bound =
      app.add_subcommand("bound", "two-copy mixed-state lower bound");
  bound->add_option("--state", state_file, "state JSON file");
  bound->add_option("--named", named, "builtin state name");
  bound->add_option("--alpha1", alpha1, "mixing weight in [0,1]");
  bound->add_flag("--no-clamp", no_clamp, "report the signed pre-root value");

  CLI::App* audit =
      app.add_subcommand("audit", "numerical validity audit of the bound");
  audit->add_option("--alpha1", alpha1, "mixing weight in [0,1]");
  audit->add_option("--trials", trials, "number of random tuples");
  audit->add_option("--seed", seed, "RNG seed");
  audit->add_flag("--sign-flip", sign_flip,
                  "negative-control hook: flip a cross-term coefficient");

  CLI::App* sweep =
      app.add_subcommand("sweep-werner", "bound vs. oracle on the Werner line");
  sweep->add_option("--points", points, "grid points (>= 2)");
  sweep->add_option("--alpha1", alpha1, "mixing weight in [0,1]");
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* experiment =
      app.add_subcommand("experiment", "simulated measurement protocol");
  experiment->add_option("--config", config_file, "experiment JSON file")
      ->required();
  experiment->add_option("--seed", seed, "override the config seed");

  CLI::App* oracle =
      app.add_subcommand("oracle", "closed-form reference values");
  oracle->add_option("--state", state_file, "state JSON file");
  oracle->add_option("--named", named, "builtin state name");
  oracle->add_option("--which", which, "oracle to evaluate")
      ->check(CLI::IsMember(
          {"wootters", "ckw-tangle", "schmidt-g", "negativity", "entropy"}));
  oracle->add_option("--convention", convention, "schmidt-g convention")
      ->check(CLI::IsMember({"normalized", "geometric"}));

  CLI::App* state_gen =
      app.add_subcommand("state", "emit a builtin state as JSON");
  state_gen->add_option("--named", named, "builtin state name")->required();
  state_gen->add_option("--out", out_file, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*pure) return cmd_pure(state_file, named, monotone, raw, out);
    if (*bound) return cmd_bound(state_file, named, alpha1, no_clamp, out);
    if (*audit) return cmd_audit(alpha1, trials, sign_flip, seed, out, err);
    if (*sweep) return cmd_sweep_werner(points, alpha1, format, out);
    if (*experiment) return cmd_experiment(config_file, seed, out);
    if (*oracle) return cmd_oracle(state_file, named, which, convention, out);
    if (*state_gen) return cmd_state(named, out_file, out);
    err << "error: no subcommand\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace entmeter::cli
