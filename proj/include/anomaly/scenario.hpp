#pragma once

#include "anomaly/verify.hpp"

#include <json.hpp>

#include <string>

namespace anomaly {

using Json = nlohmann::ordered_json;

// complex entries are [re, im] pairs; a matrix is an array of rows
Mat parse_matrix(const nlohmann::json& j);
Json matrix_json(const Mat& m);

nlohmann::json load_json_file(const std::string& path);

struct ScenarioOutcome {
  bool pass = false;
  Json report;
};

// kinds: "glue_pair" (explicit structures and frames), "graph_pair"
// (structures and graph matrices), "chain_triple" (rotation eigenvalues),
// "toy_tau" (cut circle data)
ScenarioOutcome run_scenario(const nlohmann::json& scenario, const Tol& tol);

}  // namespace anomaly
