#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monocomp/adversarial.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

enum class Model { pairing, hamilton_sum, kout };

const char* to_string(Model m);
std::optional<Model> model_from_string(std::string_view name);

struct ExponentParams {
  double ham_block = 0.7;
  double ham_path_audit = 0.4;
  double kout_block = 0.9;
  double kout_peel = 0.85;
};

struct ExperimentConfig {
  Model model = Model::hamilton_sum;
  int r = 2;
  int degree = 0;  // pairing-model degree; 0 picks the model default
  std::vector<std::int64_t> n_grid;
  int trials = 1;
  Seed master_seed = 1;
  std::vector<Strategy> strategies;  // adversarial runs; empty means all three
  std::string out_path;              // JSONL records; empty means stdout only
  int jobs = 1;
  bool timing = false;  // wall_ms stays null unless set, keeping output reproducible
  ExponentParams exponents;
  // density-audit knobs for adversarial runs
  double density_c = 0.0;  // 0 picks the model's local-density constant
  int smax = 8;
  std::int64_t audit_budget = 10'000'000;

  void validate() const;  // throws config_error
};

// Flat "key = value" lines, '#' comments. Unknown keys are config_errors.
ExperimentConfig parse_config_text(const std::string& text);

struct RunRecord {
  std::string model;
  std::int64_t n = 0;
  int r = 0;
  std::optional<int> d;  // pairing degree
  std::optional<int> k;  // digraph count when it differs from r
  int trial = 0;
  Seed seed = 0;
  std::int64_t edges = 0;
  std::vector<int> max_component_per_color;
  int max_component = 0;
  double max_fraction = 0.0;
  // structured-coloring details (null when the run has no such phase)
  std::optional<std::int64_t> estar_size;
  std::optional<int> block_count;
  std::optional<int> max_block;
  std::optional<int> peel_iterations;
  std::optional<int> path_max;
  std::optional<std::int64_t> path_threshold;
  std::optional<int> path_violations;
  std::optional<int> arbo_max_order;
  std::optional<int> arbo_max_height;
  std::optional<int> arbo_unicyclic;
  // adversarial details
  std::optional<std::string> strategy;
  std::optional<bool> fallback;
  std::optional<int> majority_color;
  std::optional<std::int64_t> majority_edges;
  std::optional<std::string> audit_status;  // passed | violated | refused
  std::optional<double> audit_worst_ratio;
  std::optional<std::int64_t> audit_sets;
  std::optional<double> bound_value;
  std::optional<bool> hypothesis_holds;
  std::optional<int> cycle_length;
  std::optional<double> wall_ms;  // populated only when timing was requested
};

// One JSON object per record, fixed key order, no trailing newline.
std::string to_json_line(const RunRecord& rec);

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::string summary_csv;  // keyed by (model, r, n[, strategy])
  std::optional<double> fitted_exponent;  // log-log slope of median max component
};

// Generates, colors and audits trials over cfg.n_grid. Records stream to
// jsonl_sink (when given) as soon as they are final, in deterministic order
// independent of cfg.jobs.
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* jsonl_sink = nullptr);

// Adversarial colorings of pairing-model or digraph-sum graphs, plus density
// audit and long-cycle search on the majority color class.
ExperimentResult run_adversarial(const ExperimentConfig& cfg, std::ostream* jsonl_sink = nullptr);

// Least-squares slope of log(y) against log(x); nullopt for fewer than two
// usable points.
std::optional<double> fit_exponent(const std::vector<std::pair<double, double>>& points);

}  // namespace monocomp
