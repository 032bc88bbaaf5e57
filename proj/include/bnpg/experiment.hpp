#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bnpg/dispatch.hpp"
#include "bnpg/instance_gen.hpp"

namespace bnpg {

/// Sweep design: the cell grid is graphs x gammas x alpha_pools x
/// beta_pools, with `replications` games per cell. Per-replication seeds
/// derive from (seed, row index), so results do not depend on thread
/// count.
struct ExperimentConfig {
  std::uint64_t seed = 0;
  int replications = 1;
  std::vector<GraphSpec> graphs;
  std::vector<double> gammas;
  std::vector<std::vector<double>> alpha_pools = {{0.1, 0.3, 0.5, 0.7, 0.9}};
  std::vector<std::vector<double>> beta_pools = {{1.2, 1.5, 2.0}};
  Method method = Method::heuristic;
  HeuristicParams heuristic;
  int oracle_limit = kDefaultOracleLimit;
  int threads = 1;
  bool timing = true;
  std::string rows_path;       // optional defaults from the config file
  std::string aggregate_path;  // optional
};

/// Parse and sanity-check a JSON config. Throws ParseError on shape
/// problems or std::invalid_argument on bad values (empty grids, bad
/// replication count).
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig experiment_config_from_string(const std::string& text);

struct ExperimentRow {
  std::int64_t row = 0;
  std::int64_t cell = 0;
  std::uint64_t seed = 0;
  GraphSpec graph;  // with the per-row seed filled in
  double gamma = 0.0;
  std::vector<double> alpha_pool;
  std::vector<double> beta_pool;
  std::string method;  // solver that ran
  SolveStatus status = SolveStatus::no_psne;
  double epsilon = 0.0;        // NaN when no profile
  double invest_ratio = 0.0;   // NaN when no profile
  double social_welfare = 0.0; // NaN when no profile
  double wall_ms = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Fixed-schema CSVs. The wall_ms column is left empty when timing is
/// disabled; everything else is byte-reproducible per seed.
void write_rows_csv(const ExperimentResult& result, std::ostream& out);
void write_aggregate_csv(const ExperimentResult& result, std::ostream& out);

/// Shortest round-trip decimal form; NaN renders as the empty string.
std::string format_double(double v);

}  // namespace bnpg
