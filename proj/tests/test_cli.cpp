#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bnpg/game_io.hpp"
#include "cli_commands.hpp"
#include "support/fixtures.hpp"

using namespace bnpg;
using namespace bnpg::cli;
using namespace bnpg::test;

namespace {

struct TempPath {
  std::string path;
  explicit TempPath(std::string p) : path(std::move(p)) {}
  ~TempPath() { std::remove(path.c_str()); }
};

std::string write_game(const BnpgInstance& inst, const std::string& path) {
  save_game(inst, path);
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve reports statuses with the documented exit codes") {
  TempPath game("cli_path.game");
  write_game(path_game(), game.path);

  std::ostringstream out, err;
  SolveOptions opt;
  opt.game_path = game.path;
  opt.method = "tree";
  CHECK(run_solve(opt, out, err) == kExitNoPsne);
  CHECK(out.str() == "method: tree\nstatus: no_psne\n");

  TempPath k3("cli_k3.game");
  write_game(k3_family_game(), k3.path);
  out.str("");
  opt.game_path = k3.path;
  opt.method = "complete";
  CHECK(run_solve(opt, out, err) == kExitPsne);
  CHECK(out.str().find("status: psne") != std::string::npos);
  CHECK(out.str().find("profile: 110") != std::string::npos);

  // auto on the path fixture dispatches to the tree solver.
  out.str("");
  opt.game_path = game.path;
  opt.method = "auto";
  CHECK(run_solve(opt, out, err) == kExitNoPsne);
  CHECK(out.str().find("method: tree") != std::string::npos);

  opt.method = "bogus";
  CHECK(run_solve(opt, out, err) == kExitError);
  opt.method = "auto";
  opt.game_path = "missing.game";
  CHECK(run_solve(opt, out, err) == kExitError);
}

TEST_CASE("auto dispatch is not fooled by near misses") {
  // Complete minus one edge, heterogeneous: must fall through to the
  // oracle, not the complete-graph solver.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
  Rng rng(50);
  const auto near_complete = random_dyadic_instance(Graph(5, edges), rng);
  TempPath game("cli_near.game");
  write_game(near_complete, game.path);

  std::ostringstream out, err;
  SolveOptions opt;
  opt.game_path = game.path;
  CHECK(run_solve(opt, out, err) != kExitError);
  CHECK(out.str().find("method: oracle") != std::string::npos);

  // Tree plus one extra edge: same story.
  Graph unicyclic(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto cyc = random_dyadic_instance(unicyclic, rng);
  TempPath game2("cli_cyc.game");
  write_game(cyc, game2.path);
  out.str("");
  opt.game_path = game2.path;
  CHECK(run_solve(opt, out, err) != kExitError);
  CHECK(out.str().find("method: oracle") != std::string::npos);
}

TEST_CASE("check evaluates profiles") {
  TempPath game("cli_check.game");
  write_game(path_game(), game.path);

  std::ostringstream out, err;
  CheckOptions opt;
  opt.game_path = game.path;
  opt.profile_bits = "000";
  CHECK(run_check(opt, out, err) == kExitApprox);
  CHECK(out.str().find("psne: no") != std::string::npos);
  CHECK(out.str().find("max_epsilon: 0.5") != std::string::npos);
  CHECK(out.str().find("social_welfare: 13.5") != std::string::npos);
  CHECK(out.str().find("player 1: 0.5") != std::string::npos);

  out.str("");
  opt.profile_bits = "111";
  CHECK(run_check(opt, out, err) == kExitApprox);
  CHECK(out.str().find("max_epsilon: 1.5") != std::string::npos);

  opt.profile_bits = "01";
  CHECK(run_check(opt, out, err) == kExitError);

  TempPath solo("cli_solo.game");
  write_game(single_player_game(0, 1, 0.5), solo.path);
  out.str("");
  opt.game_path = solo.path;
  opt.profile_bits = "1";
  CHECK(run_check(opt, out, err) == kExitPsne);
  CHECK(out.str().find("psne: yes") != std::string::npos);
}

TEST_CASE("gen writes loadable files that round-trip") {
  TempPath game("cli_gen.game");
  std::ostringstream out, err;
  GenOptions opt;
  opt.kind = "complete";
  opt.n = 5;
  opt.gamma = 1.0;
  opt.seed = 7;
  opt.out_path = game.path;
  REQUIRE(run_gen(opt, out, err) == 0);

  const auto doc = load_game(game.path);
  CHECK(doc.instance.n() == 5);
  CHECK(doc.instance.graph().edge_count() == 10);
  CHECK_FALSE(doc.provenance.is_null());

  // Same flags, identical bytes.
  TempPath game2("cli_gen2.game");
  opt.out_path = game2.path;
  REQUIRE(run_gen(opt, out, err) == 0);
  CHECK(slurp(game.path) == slurp(game2.path));

  // Loader emits the same bytes it read.
  CHECK(game_to_string(doc.instance, doc.provenance) == slurp(game.path));

  TempPath tree("cli_gen_tree.game");
  opt.kind = "tree";
  opt.n = 1000;
  opt.out_path = tree.path;
  REQUIRE(run_gen(opt, out, err) == 0);
  CHECK(load_game(tree.path).instance.graph().edge_count() == 999);

  ValidateOptions v;
  v.game_path = tree.path;
  out.str("");
  CHECK(run_validate(v, out, err) == 0);
  CHECK(out.str() == "valid\n");
}

TEST_CASE("kcore solve surfaces the inventory") {
  TempPath game("cli_kcore.game");
  // Triangle with pendant, threshold 2: all-zeros plus the triangle.
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  write_game(make_instance(g, {3, 3, 3, 3},
                           {{0, 1, 3, 7}, {0, 1, 3, 7}, {0, 1, 3, 7, 15}, {0, 1, 3}},
                           Homogeneity::fully_homogeneous),
             game.path);

  std::ostringstream out, err;
  SolveOptions opt;
  opt.game_path = game.path;
  opt.method = "auto";
  CHECK(run_solve(opt, out, err) == kExitPsne);
  CHECK(out.str().find("method: kcore") != std::string::npos);
  CHECK(out.str().find("profile: 1110") != std::string::npos);
  CHECK(out.str().find("psne_inventory:\n  0000\n  1110\n") != std::string::npos);
}

TEST_CASE("experiment command writes CSVs") {
  TempPath cfg_file("cli_exp.json");
  {
    std::ofstream cfg(cfg_file.path);
    cfg << R"({
      "seed": 5,
      "replications": 2,
      "graphs": [{"kind": "tree", "n": 20}],
      "gammas": [0.0],
      "alpha_pools": [[0.5]],
      "beta_pools": [[1.5]],
      "method": "heuristic",
      "timing": false
    })";
  }
  TempPath rows("cli_exp_rows.csv");
  TempPath agg("cli_exp_agg.csv");

  std::ostringstream out, err;
  ExperimentOptions opt;
  opt.config_path = cfg_file.path;
  opt.rows_path = rows.path;
  opt.aggregate_path = agg.path;
  REQUIRE(run_experiment_cmd(opt, out, err) == 0);

  const std::string rows_text = slurp(rows.path);
  CHECK(rows_text.find("row,seed,graph") == 0);
  CHECK(std::count(rows_text.begin(), rows_text.end(), '\n') == 3);  // header + 2 rows
  CHECK(slurp(agg.path).find("psne_rate") != std::string::npos);

  // Re-running yields identical bytes (timing disabled).
  TempPath rows2("cli_exp_rows2.csv");
  opt.rows_path = rows2.path;
  opt.aggregate_path = "";
  REQUIRE(run_experiment_cmd(opt, out, err) == 0);
  CHECK(slurp(rows2.path) == rows_text);

  opt.config_path = "missing.json";
  CHECK(run_experiment_cmd(opt, out, err) == kExitError);
}

TEST_SUITE_END();
