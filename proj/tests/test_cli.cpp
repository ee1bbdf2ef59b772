#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "entmeter/named_states.hpp"
#include "entmeter/serialization.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("entmeter");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = entmeter::cli::run_cli(static_cast<int>(argv.size()),
                                          argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"pure", "--bogus-flag"}).code == 2);
  CHECK(run({"pure"}).code == 2);  // neither --state nor --named
  CHECK(run({"pure", "--named", "singlet", "--state", "x.json"}).code == 2);
  CHECK(run({"pure", "--named", "unknown-state"}).code == 2);
  CHECK(run({"bound", "--named", "werner:2.0"}).code == 2);
  CHECK(run({"bound", "--named", "singlet", "--alpha1", "1.5"}).code == 2);
  CHECK(run({"experiment", "--config", "/nonexistent.json"}).code == 2);
  CHECK(run({"sweep-werner", "--points", "1"}).code == 2);
  CHECK(run({"oracle", "--named", "singlet", "--which", "sorcery"}).code == 2);
}

TEST_CASE("help is not an error") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pure") != std::string::npos);
}

TEST_CASE("pure subcommand reports calibrated values") {
  const CliResult r = run({"pure", "--named", "singlet"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(doc.at("raw_expectation").get<double>() ==
        doctest::Approx(0.25).epsilon(1e-9));

  const CliResult tangle =
      run({"pure", "--named", "ghz", "--monotone", "tangle"});
  REQUIRE(tangle.code == 0);
  CHECK(nlohmann::json::parse(tangle.out).at("value").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pure subcommand requires a pure state") {
  const CliResult r = run({"pure", "--named", "werner:0.5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("pure") != std::string::npos);
}

TEST_CASE("bound subcommand matches the closed-form Werner values") {
  const CliResult r = run({"bound", "--named", "werner:0.9"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("raw_trace").get<double>() ==
        doctest::Approx(0.715).epsilon(1e-9));
  CHECK(doc.at("oracle").get<double>() == doctest::Approx(0.85).epsilon(1e-9));
}

TEST_CASE("state and pure subcommands compose through a file") {
  const CliResult emitted = run({"state", "--named", "ghz"});
  REQUIRE(emitted.code == 0);
  const auto path = temp_file("entmeter_cli_ghz.json", emitted.out);
  const CliResult evaluated =
      run({"pure", "--state", path.string(), "--monotone", "tangle"});
  REQUIRE(evaluated.code == 0);
  CHECK(nlohmann::json::parse(evaluated.out).at("value").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  std::filesystem::remove(path);
}

TEST_CASE("oracle subcommand dispatches across estimators") {
  CHECK(nlohmann::json::parse(
            run({"oracle", "--named", "werner:0.8", "--which", "wootters"}).out)
            .at("value")
            .get<double>() == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(nlohmann::json::parse(
            run({"oracle", "--named", "ghz", "--which", "ckw-tangle"}).out)
            .at("value")
            .get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(nlohmann::json::parse(
            run({"oracle", "--named", "singlet", "--which", "negativity"}).out)
            .at("value")
            .get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  const double geometric =
      nlohmann::json::parse(run({"oracle", "--named", "maxent3", "--which",
                                 "schmidt-g", "--convention", "geometric"})
                                .out)
          .at("value")
          .get<double>();
  CHECK(geometric == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));

  // The colon form generalizes the fixed aliases to any dimension.
  const double entropy5 =
      nlohmann::json::parse(
          run({"oracle", "--named", "maxent:5", "--which", "entropy"}).out)
          .at("value")
          .get<double>();
  CHECK(entropy5 == doctest::Approx(std::log(5.0)).epsilon(1e-9));
  CHECK(run({"oracle", "--named", "maxent:x"}).code == 2);
  CHECK(run({"oracle", "--named", "maxent:1"}).code == 2);
}

TEST_CASE("audit passes and the sign-flip control fails") {
  const CliResult good = run({"audit", "--trials", "300", "--seed", "5"});
  REQUIRE(good.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(good.out);
  CHECK(doc.at("violations").get<int>() == 0);
  CHECK(doc.at("certified").get<bool>());

  const CliResult bad =
      run({"audit", "--trials", "300", "--seed", "5", "--sign-flip"});
  CHECK(bad.code == 3);
  CHECK(nlohmann::json::parse(bad.out).at("violations").get<int>() > 0);
}

TEST_CASE("audit is deterministic under an explicit seed") {
  const CliResult a = run({"audit", "--trials", "200", "--seed", "11"});
  const CliResult b = run({"audit", "--trials", "200", "--seed", "11"});
  CHECK(a.out == b.out);
}

TEST_CASE("seed resolution falls back to the environment") {
  setenv("ENTMETER_SEED", "77", 1);
  const CliResult env_run = run({"audit", "--trials", "150"});
  const CliResult flag_run = run({"audit", "--trials", "150", "--seed", "77"});
  CHECK(env_run.out == flag_run.out);

  setenv("ENTMETER_SEED", "not-a-number", 1);
  CHECK(run({"audit", "--trials", "10"}).code == 2);
  unsetenv("ENTMETER_SEED");
}

TEST_CASE("werner sweep emits both formats") {
  const CliResult csv = run({"sweep-werner", "--points", "5"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("p,bound,wootters,gap\n", 0) == 0);
  int lines = 0;
  for (char c : csv.out) lines += (c == '\n');
  CHECK(lines == 6);

  const CliResult json =
      run({"sweep-werner", "--points", "5", "--format", "json"});
  REQUIRE(json.code == 0);
  const nlohmann::json rows = nlohmann::json::parse(json.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows.back().at("p").get<double>() == 1.0);
  CHECK(rows.back().at("bound").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rows.front().at("bound").get<double>() == 0.0);
}

TEST_CASE("experiment subcommand consumes a config file") {
  nlohmann::json state =
      nlohmann::json::parse(entmeter::write_state_json(entmeter::singlet_state()));
  nlohmann::json config = {
      {"source",
       {{"label", "pristine"},
        {"ensemble", {{{"probability", 1.0}, {"state", state}}}}}},
      {"n_copies", 2},
      {"shots", 2000},
      {"seed", 3},
      {"observable", {{"bound_alpha1", 0.5}}}};
  const auto path = temp_file("entmeter_cli_exp.json", config.dump());
  const CliResult r = run({"experiment", "--config", path.string()});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("bound").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(doc.at("estimate").is_number());
  std::filesystem::remove(path);
}
