#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "bnpg/experiment.hpp"
#include "bnpg/instance_gen.hpp"

namespace bnpg::cli {

// Exit codes: 0 PSNE found, 1 certified no-PSNE, 2 approximate only,
// 3 any error (usage, parse, validation).
inline constexpr int kExitPsne = 0;
inline constexpr int kExitNoPsne = 1;
inline constexpr int kExitApprox = 2;
inline constexpr int kExitError = 3;

struct GenOptions {
  std::string kind = "complete";
  int n = 0;
  std::uint64_t seed = 0;
  double gamma = 0.5;
  std::vector<double> alpha_set;  // empty -> default pool
  std::vector<double> beta_set;
  int ba_edges = 3;
  double ba_offset = 0.0;
  int ws_degree = 4;
  double ws_rewire = 0.1;
  double er_prob = 0.05;
  std::string out_path;
};

struct SolveOptions {
  std::string game_path;
  std::string method = "auto";
  HeuristicParams heuristic;
  int oracle_limit = kDefaultOracleLimit;
  bool allow_forest = false;
};

struct CheckOptions {
  std::string game_path;
  std::string profile_bits;
};

struct ValidateOptions {
  std::string game_path;
};

struct ExperimentOptions {
  std::string config_path;
  std::string rows_path;       // overrides config when non-empty
  std::string aggregate_path;  // overrides config when non-empty
  int threads = 0;             // 0 keeps the config value
  std::optional<bool> timing;
};

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int run_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err);
int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int run_experiment_cmd(const ExperimentOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace bnpg::cli
