#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hardy/serialization.hpp"

namespace hardy {

// Parsed experiment configuration (schema 1).  Identical config + seed +
// threads must produce byte-identical reports; different thread counts must
// produce identical numeric fields (enforced by per-index parallelism with
// ordered reductions).
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  int threads = 1;
  int grid = 1 << 12;
  std::vector<double> p_ladder;
  std::vector<double> alpha_ladder;
  json params = json::object();

  static ExperimentConfig from_json(const json& j);
  json to_json() const;
};

struct Column {
  std::string name;
  bool integral = false;  // formatted as a plain integer in CSV
};

struct ReportTable {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
};

// Serializable experiment outcome; every verdict is recomputable from the
// emitted rows and tolerances.
struct Report {
  std::string experiment;
  json config_echo;
  std::vector<ReportTable> tables;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::map<std::string, double> tolerances;
  json extra = json::object();  // informational outputs (floors, rescales, ...)

  bool all_pass() const;
  json to_json() const;
  std::string to_csv() const;
  void write(const std::string& json_path, const std::string& csv_path) const;
};

// Builders shared with the CLI; `spec` is a point-set/function description as
// documented by the `schema` subcommand.
PointSet build_pointset(const json& spec);
FunctionSpec build_function(const json& spec);
std::vector<FunctionSpec> builtin_forward_family(std::uint64_t seed);

Report run_theorem1_forward(const ExperimentConfig& cfg);
Report run_theorem1_converse(const ExperimentConfig& cfg);
Report run_theorem2_experiments(const ExperimentConfig& cfg);
Report run_prop3(const ExperimentConfig& cfg);
Report run_lemma2(const ExperimentConfig& cfg);

// Dispatch by cfg.experiment; throws std::invalid_argument on unknown names.
Report run_experiment(const ExperimentConfig& cfg);

// Default config for each experiment name (what `hardy experiment <name>`
// runs when no --config is given).
ExperimentConfig default_config(const std::string& name);

int cli_main(int argc, const char* const* argv);

}  // namespace hardy
