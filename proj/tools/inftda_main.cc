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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inftda/inftda.hpp"

namespace {

// Exit codes: 0 success, 1 usage/validation, 2 input parse/io, 3 runtime.
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitRuntime = 3;

struct RunConfig {
  std::string input;
  std::string output;
  std::string rho_text = "1";
  double beta = 0.05;
  std::uint64_t seed = 0;
  std::vector<std::string> columns;
  std::string format = "records";
  std::size_t trials = 100;
  bool zero_noise = false;
  unsigned threads = 1;
};

inftda::Rational parse_rho(const std::string& text) {
  inftda::Rational rho;
  try {
    rho = inftda::parse_rational(text);
  } catch (const inftda::ParseError& e) {
    throw inftda::InvalidArgument(std::string("--rho: ") + e.what());
  }
  if (rho <= 0) {
    throw inftda::InvalidArgument("--rho must be positive");
  }
  return rho;
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw inftda::InvalidArgument("--beta must lie in (0, 1)");
  }
}

std::optional<std::vector<std::string>> column_override(
    const RunConfig& config) {
  if (config.columns.empty()) {
    return std::nullopt;
  }
  return config.columns;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw inftda::IoError("cannot open output file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw inftda::IoError("failed writing output file '" + path + "'");
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void print_level_table(const inftda::ErrorReport& report) {
  std::printf("level  max_abs_error  bound        nodes_true  nodes_dp\n");
  for (const inftda::LevelReport& level : report.per_level) {
    std::printf("%5u  %13lld  %-11.3f  %10lld  %8lld\n", level.level,
                level.max_abs_error, level.bound, level.nodes_true,
                level.nodes_dp);
  }
}

int cmd_run(const RunConfig& config) {
  const inftda::Rational rho = parse_rho(config.rho_text);
  check_beta(config.beta);
  if (config.format != "records" && config.format != "table") {
    throw inftda::InvalidArgument("--format must be 'records' or 'table'");
  }
  const inftda::Dataset dataset =
      inftda::ingest_csv_file(config.input, column_override(config));
  const inftda::PrivacyParams params(
      rho, static_cast<std::uint32_t>(dataset.schema().dimension()));
  const inftda::Key256 key = inftda::expand_seed(config.seed);

  const auto start = std::chrono::steady_clock::now();
  const inftda::PrivateTree tree = inftda::run_topdown(
      dataset, params, key, {config.zero_noise, config.threads});
  const double runtime = elapsed_ms(start);

  const inftda::ContingencyTable private_table = inftda::to_table(tree);
  std::ostringstream csv;
  if (config.format == "records") {
    inftda::write_records_csv(csv, private_table);
  } else {
    inftda::write_table_csv(csv, private_table);
  }
  write_text_file(config.output, csv.str());

  const inftda::ContingencyTable truth = inftda::contingency(dataset);
  const inftda::ErrorReport report = inftda::make_error_report(
      truth, tree, config.beta, config.seed, runtime);
  const std::string report_path = config.output + ".report.json";
  write_text_file(report_path, inftda::report_to_json(report).dump(2) + "\n");

  std::printf("wrote %s (%s format, n=%lld) and %s\n", config.output.c_str(),
              config.format.c_str(), private_table.total(),
              report_path.c_str());
  print_level_table(report);
  std::printf("runtime: %.1f ms\n", report.runtime_ms);
  return 0;
}

int cmd_bound(std::size_t k, bool all_levels, const std::string& rho_text,
              double beta, const std::vector<std::size_t>& domains) {
  const inftda::Rational rho = parse_rho(rho_text);
  check_beta(beta);
  if (domains.empty()) {
    throw inftda::InvalidArgument("--domains must list at least one size");
  }
  for (std::size_t size : domains) {
    if (size < 2) {
      throw inftda::InvalidArgument("every domain size must be at least 2");
    }
  }
  const std::size_t d = domains.size();
  if (!all_levels && (k < 1 || k > d)) {
    throw inftda::InvalidArgument("--k must lie in [1, number of domains]");
  }
  const std::size_t first = all_levels ? 1 : k;
  const std::size_t last = all_levels ? d : k;
  for (std::size_t level = first; level <= last; ++level) {
    std::printf("%.3f\n", inftda::utility_bound(level, d, rho, beta, domains));
  }
  return 0;
}

int cmd_evaluate(const RunConfig& config) {
  const inftda::Rational rho = parse_rho(config.rho_text);
  check_beta(config.beta);
  if (config.trials < 1) {
    throw inftda::InvalidArgument("--trials must be at least 1");
  }
  const inftda::Dataset dataset =
      inftda::ingest_csv_file(config.input, column_override(config));
  const inftda::Key256 key = inftda::expand_seed(config.seed);

  const auto start = std::chrono::steady_clock::now();
  const inftda::BoundExperimentResult result = inftda::bound_experiment(
      dataset, rho, config.beta, config.trials, key,
      {config.zero_noise, config.threads});
  const double runtime = elapsed_ms(start);

  write_text_file(
      config.output,
      inftda::experiment_to_json(rho, config.beta, config.seed, result)
              .dump(2) +
          "\n");

  std::printf("wrote %s (%zu trials)\n", config.output.c_str(), result.trials);
  std::printf("level  max_abs_error  bound        pass_rate\n");
  for (std::size_t level = 0; level < result.bounds.size(); ++level) {
    std::printf("%5zu  %13lld  %-11.3f  %9.3f\n", level,
                result.worst_error[level], result.bounds[level],
                result.pass_rate[level]);
  }
  std::printf("joint pass rate: %.3f\n", result.joint_pass_rate);
  std::printf("runtime: %.1f ms\n", runtime);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Differentially private synthetic contingency tables via the InfTDA "
      "TopDown mechanism"};
  app.require_subcommand(1);

  RunConfig config;
  std::size_t bound_k = 0;
  bool all_levels = false;
  std::vector<std::size_t> domains;

  CLI::App* run = app.add_subcommand(
      "run", "Privatize a CSV dataset and write the synthetic output");
  run->add_option("--input", config.input, "input CSV (header row first)")
      ->required();
  run->add_option("--output", config.output,
                  "output CSV path; the error report goes to "
                  "<output>.report.json")
      ->required();
  run->add_option("--rho", config.rho_text,
                  "zCDP budget, rational text like '1', '0.5' or '1/2'");
  run->add_option("--beta", config.beta,
                  "failure probability used in the reported bounds");
  run->add_option("--seed", config.seed, "64-bit seed; all randomness");
  run->add_option("--columns", config.columns,
                  "comma-separated column order override (hierarchy order)")
      ->delimiter(',');
  run->add_option("--format", config.format, "'records' or 'table'");
  run->add_flag("--zero-noise", config.zero_noise,
                "test mode: skip noise entirely");
  run->add_option("--threads", config.threads, "worker thread cap");

  CLI::App* bound = app.add_subcommand(
      "bound", "Print the theoretical max-error bound per level");
  bound->add_option("--k", bound_k, "level to bound (1..d)");
  bound->add_flag("--all-levels", all_levels, "print bounds for k = 1..d");
  bound->add_option("--rho", config.rho_text, "zCDP budget (rational text)");
  bound->add_option("--beta", config.beta, "failure probability in (0,1)");
  bound->add_option("--domains", domains,
                    "comma-separated attribute domain sizes")
      ->required()
      ->delimiter(',');

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Run repeated trials and check errors against the bound");
  evaluate->add_option("--input", config.input, "input CSV")->required();
  evaluate->add_option("--output", config.output, "report JSON path")
      ->required();
  evaluate->add_option("--rho", config.rho_text, "zCDP budget");
  evaluate->add_option("--beta", config.beta, "failure probability");
  evaluate->add_option("--seed", config.seed, "64-bit seed");
  evaluate->add_option("--trials", config.trials, "number of trials");
  evaluate->add_option("--columns", config.columns, "column order override")
      ->delimiter(',');
  evaluate->add_flag("--zero-noise", config.zero_noise, "test mode");
  evaluate->add_option("--threads", config.threads, "worker thread cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(config);
    }
    if (bound->parsed()) {
      return cmd_bound(bound_k, all_levels, config.rho_text, config.beta,
                       domains);
    }
    return cmd_evaluate(config);
  } catch (const inftda::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const inftda::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const inftda::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
