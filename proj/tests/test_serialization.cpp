// Copyright 2026 The entmeter Authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "entmeter/mixed_bounds.hpp"
#include "entmeter/named_states.hpp"
#include "entmeter/random.hpp"
#include "entmeter/serialization.hpp"

using namespace entmeter;

TEST_CASE("pure states round-trip bit for bit") {
  Rng rng(700);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 3}});
  const StateVector psi = random_state(layout, rng);
  const LoadedState back = read_state_json(write_state_json(psi));
  REQUIRE(back.pure.has_value());
  CHECK_FALSE(back.density.has_value());
  CHECK(back.pure->layout == psi.layout);
  CHECK((back.pure->amplitudes - psi.amplitudes).norm() == 0.0);
}

TEST_CASE("density operators round-trip bit for bit") {
  Rng rng(701);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  const DensityOperator rho = random_density(layout, 3, rng);
  const LoadedState back = read_state_json(write_state_json(rho));
  REQUIRE(back.density.has_value());
  CHECK(back.density->layout == rho.layout);
  CHECK((back.density->matrix - rho.matrix).norm() == 0.0);
}

TEST_CASE("state parsing rejects malformed documents") {
  CHECK_THROWS_AS(read_state_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(read_state_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      read_state_json(R"({"kind":"pure","legs":[],"re":[],"im":[]})"),
      std::invalid_argument);
  // Length mismatch against the declared legs.
  CHECK_THROWS_AS(
      read_state_json(
          R"({"kind":"pure","legs":[{"copy":0,"subsystem":"A","dim":2}],)"
          R"("re":[1.0],"im":[0.0]})"),
      std::invalid_argument);
  // Unnormalizable content must fail validation on load.
  CHECK_THROWS_AS(
      read_state_json(
          R"({"kind":"pure","legs":[{"copy":0,"subsystem":"A","dim":2}],)"
          R"("re":[9.0,0.0],"im":[0.0,0.0]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      read_state_json(
          R"({"kind":"wavefunction","legs":[{"copy":0,"subsystem":"A","dim":2}],)"
          R"("re":[1.0,0.0],"im":[0.0,0.0]})"),
      std::invalid_argument);
}

TEST_CASE("observable specs round-trip") {
  const ObservableSpec v = v_operator(BoundConfig{});
  const ObservableSpec back = read_observable_json(write_observable_json(v));
  CHECK(back == v);
  CHECK_THROWS_AS(read_observable_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      read_observable_json(
          R"({"n_copies":2,"terms":[{"coeff":1.0,"factors":)"
          R"([{"kind":"weird","subsystem":"A","copies":[0,1]}]}]})"),
      std::invalid_argument);
}

TEST_CASE("bound reports serialize their optional fields") {
  BoundReport report;
  report.bound = 0.5;
  report.raw_trace = 0.25;
  report.alpha1 = 0.5;
  report.oracle = 0.6;
  report.certified = true;

  nlohmann::json doc = nlohmann::json::parse(write_bound_report_json(report));
  CHECK(doc.at("bound").get<double>() == 0.5);
  CHECK(doc.at("oracle").get<double>() == 0.6);
  CHECK_FALSE(doc.contains("estimate"));

  BoundReport bare;
  bare.bound = 0.1;
  bare.raw_trace = 0.01;
  nlohmann::json bare_doc =
      nlohmann::json::parse(write_bound_report_json(bare));
  CHECK(bare_doc.at("oracle").is_null());
  CHECK(bare_doc.at("alpha1").is_null());

  BoundReport sampled = report;
  sampled.estimate = 0.26;
  sampled.std_error = 0.01;
  sampled.bound_estimate = 0.51;
  sampled.copy_oracles = {0.6, 0.55};
  sampled.geometric_mean_ok = true;
  nlohmann::json full = nlohmann::json::parse(write_bound_report_json(sampled));
  CHECK(full.at("estimate").get<double>() == 0.26);
  CHECK(full.at("copy_oracles").size() == 2);
  CHECK(full.at("geometric_mean_ok").get<bool>());
}

TEST_CASE("audit reports serialize verbatim") {
  AuditReport report;
  report.trials = 10;
  report.violations = 1;
  report.worst_margin = -0.25;
  report.certified = false;
  report.alpha1 = 0.75;
  nlohmann::json doc = nlohmann::json::parse(write_audit_report_json(report));
  CHECK(doc.at("trials").get<int>() == 10);
  CHECK(doc.at("violations").get<int>() == 1);
  CHECK(doc.at("worst_margin").get<double>() == -0.25);
  CHECK_FALSE(doc.at("certified").get<bool>());
}

TEST_CASE("experiment configs round-trip") {
  ExperimentConfig config;
  config.source.label = "demo";
  config.source.ensemble = {{1.0, singlet_state()}};
  config.channel = dephasing_channel(0.3);
  config.channel.steps = {2, 0};
  config.n_copies = 2;
  config.observable = v_operator(BoundConfig{});
  config.alpha1 = 0.5;
  config.shots = 123;
  config.seed = 42;

  const ExperimentConfig back =
      read_experiment_config_json(write_experiment_config_json(config));
  CHECK(back.source.label == "demo");
  CHECK(back.source.ensemble.size() == 1);
  CHECK(back.channel.kind == ChannelKind::kDephasing);
  CHECK(back.channel.q == 0.3);
  CHECK(back.channel.steps == std::vector<int>{2, 0});
  CHECK(back.observable == config.observable);
  CHECK(back.alpha1 == config.alpha1);
  CHECK(back.shots == 123);
  CHECK(back.seed == 42);
}

TEST_CASE("experiment shorthand expands to the bound operator") {
  const std::string text = R"({
    "source": {
      "label": "s",
      "ensemble": [{"probability": 1.0, "state": )" +
                           write_state_json(singlet_state()) + R"(}]
    },
    "n_copies": 2,
    "shots": 10,
    "seed": 1,
    "observable": {"bound_alpha1": 0.25}
  })";
  const ExperimentConfig config = read_experiment_config_json(text);
  REQUIRE(config.alpha1.has_value());
  CHECK(*config.alpha1 == 0.25);
  BoundConfig bc;
  bc.alpha1 = 0.25;
  ObservableSpec expect = v_operator(bc);
  // The shorthand rebinds canonical labels onto the source's subsystems,
  // which for the bundled singlet are already A and B.
  CHECK(config.observable == expect);
  CHECK(config.channel.q == 0.0);
}

TEST_CASE("experiment parsing rejects malformed documents") {
  CHECK_THROWS_AS(read_experiment_config_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(read_experiment_config_json("[1,2]"), std::invalid_argument);
  const std::string bad_channel = R"({
    "source": {"label": "s", "ensemble": [{"probability": 1.0, "state": )" +
                                  write_state_json(singlet_state()) + R"(}]},
    "channel": {"kind": "teleport", "q": 0.1},
    "n_copies": 2, "shots": 1, "seed": 0,
    "observable": {"bound_alpha1": 0.5}
  })";
  CHECK_THROWS_AS(read_experiment_config_json(bad_channel),
                  std::invalid_argument);
}
