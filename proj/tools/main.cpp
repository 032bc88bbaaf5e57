#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using namespace bnpg::cli;

  CLI::App app{"Solvers for binary networked public-goods games"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a random game file");
  cmd_gen->add_option("--kind", gen.kind,
                      "complete|path|star|cycle|tree|er|ba|ws")->required();
  cmd_gen->add_option("--n", gen.n, "number of players")->required();
  cmd_gen->add_option("--seed", gen.seed, "RNG seed");
  cmd_gen->add_option("--gamma", gen.gamma, "probability of the convex family");
  cmd_gen->add_option("--alpha", gen.alpha_set, "alpha pool override");
  cmd_gen->add_option("--beta", gen.beta_set, "beta pool override");
  cmd_gen->add_option("--ba-edges", gen.ba_edges, "BA: edges per new node");
  cmd_gen->add_option("--ba-offset", gen.ba_offset, "BA: attachment kernel offset");
  cmd_gen->add_option("--ws-degree", gen.ws_degree, "WS: even lattice degree");
  cmd_gen->add_option("--ws-rewire", gen.ws_rewire, "WS: rewiring probability");
  cmd_gen->add_option("--er-prob", gen.er_prob, "ER: edge probability");
  cmd_gen->add_option("--out", gen.out_path, "output game file")->required();

  ValidateOptions validate;
  auto* cmd_validate = app.add_subcommand("validate", "Check a game file's invariants");
  cmd_validate->add_option("file", validate.game_path, "game file")->required();

  SolveOptions solve;
  auto* cmd_solve = app.add_subcommand("solve", "Compute a PSNE or approximate PSNE");
  cmd_solve->add_option("file", solve.game_path, "game file")->required();
  cmd_solve->add_option("--method", solve.method,
                        "auto|oracle|complete|tree|kcore|heuristic");
  cmd_solve->add_option("--seed", solve.heuristic.seed, "heuristic RNG seed");
  cmd_solve->add_option("--K", solve.heuristic.K, "sweeps per evolve call");
  cmd_solve->add_option("--B", solve.heuristic.B, "max outer iterations");
  cmd_solve->add_option("--delta", solve.heuristic.delta, "stop distance");
  cmd_solve->add_option("--p", solve.heuristic.p, "norm index");
  bool unnormalized = false;
  cmd_solve->add_flag("--unnormalized", unnormalized, "report unnormalized epsilon");
  cmd_solve->add_option("--oracle-limit", solve.oracle_limit, "max n for enumeration");
  cmd_solve->add_flag("--forest", solve.allow_forest,
                      "tree method: solve components independently");

  CheckOptions check;
  auto* cmd_check = app.add_subcommand("check", "Evaluate a specific profile");
  cmd_check->add_option("file", check.game_path, "game file")->required();
  cmd_check->add_option("profile", check.profile_bits, "0/1 string")->required();

  ExperimentOptions exp;
  auto* cmd_exp = app.add_subcommand("experiment", "Run a sweep from a config file");
  cmd_exp->add_option("config", exp.config_path, "config JSON")->required();
  cmd_exp->add_option("--out", exp.rows_path, "per-replication CSV");
  cmd_exp->add_option("--aggregate", exp.aggregate_path, "per-cell CSV");
  cmd_exp->add_option("--threads", exp.threads, "worker threads");
  bool no_timing = false;
  cmd_exp->add_flag("--no-timing", no_timing, "leave the wall_ms column empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (cmd_gen->parsed()) return run_gen(gen, std::cout, std::cerr);
  if (cmd_validate->parsed()) return run_validate(validate, std::cout, std::cerr);
  if (cmd_solve->parsed()) {
    solve.heuristic.normalized = !unnormalized;
    return run_solve(solve, std::cout, std::cerr);
  }
  if (cmd_check->parsed()) return run_check(check, std::cout, std::cerr);
  if (cmd_exp->parsed()) {
    if (no_timing) exp.timing = false;
    return run_experiment_cmd(exp, std::cout, std::cerr);
  }
  return kExitError;
}
