#pragma once

#include "anomaly/sampling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace anomaly {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int cases = 50;  // base batch size; individual checks scale it
  Eigen::Index dim_max = 8;
  Tol tol;
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no runtime bound
  std::vector<std::pair<std::string, double>> stats;
  std::string note;
};

CriterionResult check_composition_batch(const VerifyOptions& o);    // 4x cases pairs
CriterionResult check_gluing_batch(const VerifyOptions& o);         // cases gluings
CriterionResult check_degenerate_generators(const VerifyOptions& o);
CriterionResult check_subtop_vanishing(const VerifyOptions& o);
CriterionResult check_coherence_batch(const VerifyOptions& o);      // cases generic + cases toy
CriterionResult check_swap_batch(const VerifyOptions& o);
CriterionResult check_toy_functoriality(const VerifyOptions& o);
CriterionResult check_car_batch(const VerifyOptions& o);
CriterionResult check_qalpha_margins(const VerifyOptions& o);

// suites: "algebra", "gluing", "functor", "all"
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& o);

std::string format_result_line(const CriterionResult& r);

}  // namespace anomaly
