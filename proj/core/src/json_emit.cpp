#include "jetmult/json_emit.hpp"

#include <algorithm>

#include <json.hpp>

#include "jetmult/text_format.hpp"

namespace jetmult {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kIndent = 2;

Json verification_json(const comp::VerificationRecord& record) {
  Json seeds = Json::array();
  Json lengths = Json::array();
  Json substitutions = Json::array();
  std::uint32_t n_used = 0;
  for (const auto& trial : record.trials) {
    seeds.push_back(trial.seed);
    lengths.push_back(trial.length);
    n_used = std::max(n_used, trial.truncation_order);
    Json values = Json::object();
    for (const auto& [var, q] : trial.substitution) {
      values[to_string(var)] = to_string(q);
    }
    substitutions.push_back(std::move(values));
  }
  Json out = Json::object();
  out["seeds"] = std::move(seeds);
  out["B"] = record.value_bound;
  out["N_used"] = n_used;
  out["lengths"] = std::move(lengths);
  out["substitutions"] = std::move(substitutions);
  return out;
}

}  // namespace

std::string to_json(const jet::JetIdeal& ideal) {
  Json out = Json::object();
  out["r"] = ideal.r;
  out["m"] = ideal.m;
  Json gens = Json::array();
  for (const auto& g : ideal.generators) {
    gens.push_back(to_string(g));
  }
  out["generators"] = std::move(gens);
  return out.dump(kIndent);
}

std::string to_json(const comp::VerificationRecord& record) {
  return verification_json(record).dump(kIndent);
}

std::string to_json(const comp::Census& census) {
  Json out = Json::object();
  out["r"] = census.r;
  out["m"] = census.m;
  Json components = Json::array();
  for (const auto& report : census.components) {
    Json row = Json::object();
    row["t"] = report.prime.composition.parts();
    Json prime = Json::array();
    for (auto v : report.prime.generators()) {
      prime.push_back(to_string(v));
    }
    row["prime"] = std::move(prime);
    row["mult_formula"] = report.multiplicity_formula.get_str();
    row["mult_recursive"] = report.multiplicity_recursive.get_str();
    row["mult_oracle"] = report.multiplicity_oracle ? Json(report.multiplicity_oracle->get_str()) : Json(nullptr);
    row["status"] = std::string(comp::to_string(report.status()));
    if (report.verification) {
      row["verification"] = verification_json(*report.verification);
    }
    if (report.oracle_error) {
      row["oracle_error"] = *report.oracle_error;
    }
    components.push_back(std::move(row));
  }
  out["components"] = std::move(components);
  out["mult_sum"] = census.multiplicity_sum.get_str();
  return out.dump(kIndent);
}

}  // namespace jetmult
