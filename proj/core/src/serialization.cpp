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

#include "entmeter/serialization.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace entmeter {

namespace {

using nlohmann::json;

json legs_to_json(const LegLayout& layout) {
  json legs = json::array();
  for (const Leg& leg : layout.legs()) {
    legs.push_back({{"copy", leg.copy},
                    {"subsystem", leg.subsystem},
                    {"dim", leg.dim}});
  }
  return legs;
}

LegLayout layout_from_json(const json& legs) {
  if (!legs.is_array() || legs.empty()) {
    throw std::invalid_argument("state json: 'legs' must be a nonempty array");
  }
  std::vector<Leg> parsed;
  for (const json& leg : legs) {
    parsed.push_back(Leg{leg.at("copy").get<int>(),
                         leg.at("subsystem").get<std::string>(),
                         leg.at("dim").get<int>()});
  }
  return LegLayout(std::move(parsed));
}

std::pair<json, json> split_complex(const Eigen::VectorXcd& values) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    re.push_back(values(i).real());
    im.push_back(values(i).imag());
  }
  return {std::move(re), std::move(im)};
}

Eigen::VectorXcd join_complex(const json& re, const json& im,
                              std::int64_t expected) {
  if (!re.is_array() || !im.is_array() ||
      static_cast<std::int64_t>(re.size()) != expected ||
      static_cast<std::int64_t>(im.size()) != expected) {
    throw std::invalid_argument(
        "state json: 're'/'im' lengths do not match the layout");
  }
  Eigen::VectorXcd out(expected);
  for (std::int64_t i = 0; i < expected; ++i) {
    out(i) = std::complex<double>(re[static_cast<size_t>(i)].get<double>(),
                                  im[static_cast<size_t>(i)].get<double>());
  }
  return out;
}

json parse(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  }
  return doc;
}

std::string kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::kSym: return "SYM";
    case FactorKind::kAntisym: return "ANTISYM";
    case FactorKind::kIdentity: return "IDENTITY";
  }
  throw std::logic_error("unreachable factor kind");
}

FactorKind kind_from_name(const std::string& name) {
  if (name == "SYM") return FactorKind::kSym;
  if (name == "ANTISYM") return FactorKind::kAntisym;
  if (name == "IDENTITY") return FactorKind::kIdentity;
  throw std::invalid_argument("observable json: unknown factor kind '" +
                              name + "'");
}

json observable_to_json(const ObservableSpec& spec) {
  json terms = json::array();
  for (const ObservableTerm& term : spec.terms) {
    json factors = json::array();
    for (const ProjectorFactor& f : term.factors) {
      factors.push_back({{"kind", kind_name(f.kind)},
                         {"subsystem", f.subsystem},
                         {"copies", f.copies}});
    }
    terms.push_back({{"coeff", term.coeff}, {"factors", std::move(factors)}});
  }
  return {{"n_copies", spec.n_copies}, {"terms", std::move(terms)}};
}

ObservableSpec observable_from_json(const json& doc) {
  ObservableSpec spec;
  spec.n_copies = doc.at("n_copies").get<int>();
  for (const json& term : doc.at("terms")) {
    ObservableTerm t;
    t.coeff = term.at("coeff").get<double>();
    for (const json& factor : term.value("factors", json::array())) {
      ProjectorFactor f;
      f.kind = kind_from_name(factor.at("kind").get<std::string>());
      f.subsystem = factor.at("subsystem").get<std::string>();
      f.copies = factor.at("copies").get<std::vector<int>>();
      t.factors.push_back(std::move(f));
    }
    spec.terms.push_back(std::move(t));
  }
  return spec;
}

json double_or_null(double x) {
  return std::isnan(x) ? json(nullptr) : json(x);
}

}  // namespace

std::string write_state_json(const StateVector& psi) {
  auto [re, im] = split_complex(psi.amplitudes);
  json doc = {{"kind", "pure"},
              {"legs", legs_to_json(psi.layout)},
              {"re", std::move(re)},
              {"im", std::move(im)}};
  return doc.dump(2);
}

std::string write_state_json(const DensityOperator& rho) {
  const std::int64_t d = rho.layout.total_dim();
  Eigen::VectorXcd flat(d * d);
  for (std::int64_t r = 0; r < d; ++r) {
    for (std::int64_t c = 0; c < d; ++c) flat(r * d + c) = rho.matrix(r, c);
  }
  auto [re, im] = split_complex(flat);
  json doc = {{"kind", "density"},
              {"legs", legs_to_json(rho.layout)},
              {"re", std::move(re)},
              {"im", std::move(im)}};
  return doc.dump(2);
}

LoadedState read_state_json(const std::string& text) {
  const json doc = parse(text, "state json");
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    const LegLayout layout = layout_from_json(doc.at("legs"));
    const std::int64_t d = layout.total_dim();

    LoadedState out;
    if (kind == "pure") {
      StateVector psi(join_complex(doc.at("re"), doc.at("im"), d), layout);
      psi.validate();
      out.pure = std::move(psi);
    } else if (kind == "density") {
      const Eigen::VectorXcd flat =
          join_complex(doc.at("re"), doc.at("im"), d * d);
      Eigen::MatrixXcd m(d, d);
      for (std::int64_t r = 0; r < d; ++r) {
        for (std::int64_t c = 0; c < d; ++c) m(r, c) = flat(r * d + c);
      }
      DensityOperator rho(std::move(m), layout);
      rho.validate();
      out.density = std::move(rho);
    } else {
      throw std::invalid_argument("state json: unknown kind '" + kind + "'");
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("state json: ") + e.what());
  }
}

std::string write_observable_json(const ObservableSpec& spec) {
  return observable_to_json(spec).dump(2);
}

ObservableSpec read_observable_json(const std::string& text) {
  try {
    return observable_from_json(parse(text, "observable json"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("observable json: ") + e.what());
  }
}

std::string write_bound_report_json(const BoundReport& report) {
  json doc = {{"bound", report.bound},
              {"raw_trace", report.raw_trace},
              {"alpha1", double_or_null(report.alpha1)},
              {"oracle", report.oracle ? json(*report.oracle) : json(nullptr)},
              {"certified", report.certified},
              {"violations", report.violations}};
  if (report.estimate) doc["estimate"] = *report.estimate;
  if (report.std_error) doc["std_error"] = *report.std_error;
  if (report.bound_estimate) doc["bound_estimate"] = *report.bound_estimate;
  if (!report.copy_oracles.empty()) doc["copy_oracles"] = report.copy_oracles;
  if (report.geometric_mean_ok) {
    doc["geometric_mean_ok"] = *report.geometric_mean_ok;
  }
  return doc.dump(2);
}

std::string write_audit_report_json(const AuditReport& report) {
  json doc = {{"trials", report.trials},
              {"violations", report.violations},
              {"worst_margin", report.worst_margin},
              {"certified", report.certified},
              {"alpha1", double_or_null(report.alpha1)}};
  return doc.dump(2);
}

ExperimentConfig read_experiment_config_json(const std::string& text) {
  const json doc = parse(text, "experiment config");
  try {
    ExperimentConfig config;

    const json& source = doc.at("source");
    config.source.label = source.value("label", std::string());
    for (const json& entry : source.at("ensemble")) {
      WeightedState ws;
      ws.probability = entry.at("probability").get<double>();
      LoadedState st = read_state_json(entry.at("state").dump());
      if (!st.pure) {
        throw std::invalid_argument(
            "experiment config: ensemble members must be pure states");
      }
      ws.state = std::move(*st.pure);
      config.source.ensemble.push_back(std::move(ws));
    }
    config.source.validate();

    if (doc.contains("channel")) {
      const json& channel = doc.at("channel");
      const std::string kind =
          channel.value("kind", std::string("depolarizing"));
      const double q = channel.value("q", 0.0);
      if (kind == "depolarizing") {
        config.channel = depolarizing_channel(q);
      } else if (kind == "dephasing") {
        config.channel = dephasing_channel(q);
      } else {
        throw std::invalid_argument(
            "experiment config: unknown channel kind '" + kind + "'");
      }
      config.channel.steps = channel.value("steps", std::vector<int>());
    }

    config.n_copies = doc.value("n_copies", 2);
    config.shots = doc.at("shots").get<std::int64_t>();
    config.seed = doc.value("seed", std::uint64_t{0});

    const json& obs = doc.at("observable");
    if (obs.contains("bound_alpha1")) {
      BoundConfig bc;
      bc.alpha1 = obs.at("bound_alpha1").get<double>();
      ObservableSpec spec = v_operator(bc);
      const auto subsystems =
          config.source.ensemble[0].state.layout.subsystems();
      config.observable = rebind_subsystems(spec, {"A", "B"}, subsystems);
      config.alpha1 = bc.alpha1;
    } else {
      config.observable = observable_from_json(obs);
    }
    return config;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("experiment config: ") + e.what());
  }
}

std::string write_experiment_config_json(const ExperimentConfig& config) {
  json ensemble = json::array();
  for (const WeightedState& ws : config.source.ensemble) {
    ensemble.push_back({{"probability", ws.probability},
                        {"state", json::parse(write_state_json(ws.state))}});
  }
  json doc = {
      {"source",
       {{"label", config.source.label}, {"ensemble", std::move(ensemble)}}},
      {"channel",
       {{"kind", config.channel.kind == ChannelKind::kDepolarizing
                     ? "depolarizing"
                     : "dephasing"},
        {"q", config.channel.q},
        {"steps", config.channel.steps}}},
      {"n_copies", config.n_copies},
      {"shots", config.shots},
      {"seed", config.seed}};
  if (config.alpha1) {
    doc["observable"] = {{"bound_alpha1", *config.alpha1}};
  } else {
    doc["observable"] = observable_to_json(config.observable);
  }
  return doc.dump(2);
}

}  // namespace entmeter
