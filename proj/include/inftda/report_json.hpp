// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFTDA_REPORT_JSON_HPP_
#define INFTDA_REPORT_JSON_HPP_

#include <json.hpp>

#include "inftda/evaluation.hpp"
#include "inftda/rational.hpp"

namespace inftda {

// JSON reports carry only inputs and deterministic results, so identical
// (input, rho, seed) runs serialize byte-identically. Wall-clock time is
// printed on the console instead.

inline nlohmann::json report_to_json(const ErrorReport& report) {
  nlohmann::json levels = nlohmann::json::array();
  for (const LevelReport& level : report.per_level) {
    levels.push_back({{"level", level.level},
                      {"max_abs_error", level.max_abs_error},
                      {"bound", level.bound},
                      {"nodes_true", level.nodes_true},
                      {"nodes_dp", level.nodes_dp}});
  }
  return nlohmann::json{{"rho", rational_to_string(report.rho)},
                        {"beta", report.beta},
                        {"seed", report.seed},
                        {"levels", std::move(levels)}};
}

inline nlohmann::json experiment_to_json(const Rational& rho, double beta,
                                         std::uint64_t seed,
                                         const BoundExperimentResult& result) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t k = 0; k < result.bounds.size(); ++k) {
    levels.push_back({{"level", k},
                      {"max_abs_error", result.worst_error[k]},
                      {"bound", result.bounds[k]},
                      {"nodes_true", result.nodes_true[k]},
                      {"nodes_dp", result.max_nodes_dp[k]},
                      {"pass_rate", result.pass_rate[k]}});
  }
  return nlohmann::json{{"rho", rational_to_string(rho)},
                        {"beta", beta},
                        {"seed", seed},
                        {"trials", result.trials},
                        {"joint_pass_rate", result.joint_pass_rate},
                        {"levels", std::move(levels)}};
}

}  // namespace inftda

#endif  // INFTDA_REPORT_JSON_HPP_
