// Acceptance suite: end-to-end checks of the solver stack against
// exhaustive enumeration, constructive counterexamples, and the
// experiment pipeline. Each criterion prints one PASS/FAIL line; the
// process exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "bnpg/complete_solver.hpp"
#include "bnpg/dispatch.hpp"
#include "bnpg/experiment.hpp"
#include "bnpg/game_io.hpp"
#include "bnpg/kcore_solver.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/tree_solver.hpp"
#include "cli_commands.hpp"
#include "support/fixtures.hpp"
#include "support/stats.hpp"

using namespace bnpg;
using namespace bnpg::test;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!detail.empty() && detail[0] == '!') {
    ok = false;
    detail = detail.substr(1);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d. %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str(), secs);
  std::fflush(stdout);
  failures += !ok;
}

std::string count_detail(int checked, int bad, const std::string& unit) {
  if (bad > 0)
    return "!" + std::to_string(bad) + " of " + std::to_string(checked) + " " + unit +
           " failed";
  return std::to_string(checked) + " " + unit + ", zero mismatches";
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

int main() {
  // 1. The two hand-built games without equilibria, recognized exactly.
  criterion(1, "no-PSNE fixtures", [] {
    int bad = 0;
    bad += !enumerate_psne(path_game()).empty();
    bad += !enumerate_psne(two_player_game()).empty();
    bad += solve_tree(path_game()).status != SolveStatus::no_psne;
    bad += solve_complete(two_player_game()).status != SolveStatus::no_psne;
    return count_detail(4, bad, "checks");
  });

  // Shared pools for criteria 2 and 4.
  std::vector<BnpgInstance> heterogeneous_pool;
  std::vector<BnpgInstance> homogeneous_pool;
  {
    Rng rng(1001);
    for (int i = 0; i < 500; ++i) {
      const int n = 2 + static_cast<int>(rng.index(9));
      heterogeneous_pool.push_back(random_dyadic_instance(complete_graph(n), rng));
    }
    Rng rng2(2002);
    for (int i = 0; i < 500; ++i) {
      const int n = 2 + static_cast<int>(rng2.index(9));
      homogeneous_pool.push_back(random_dyadic_homogeneous(complete_graph(n), rng2));
    }
  }

  // 2. Complete-graph sweep agrees with enumeration on 1000 games.
  criterion(2, "complete-graph oracle equivalence", [&] {
    int bad = 0;
    auto check = [&bad](const BnpgInstance& inst) {
      const auto truth = enumerate_psne(inst);
      const auto report = solve_complete(inst);
      if ((report.status == SolveStatus::psne) != !truth.empty()) ++bad;
      if (report.status == SolveStatus::psne && !is_psne(inst, *report.profile)) ++bad;
    };
    for (const auto& inst : heterogeneous_pool) check(inst);
    for (const auto& inst : homogeneous_pool) check(inst);
    return count_detail(1000, bad, "instances");
  });

  // 3. The sorting construction always lands on an equilibrium.
  criterion(3, "sorted greedy always finds a PSNE", [] {
    Rng rng(3003);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const int n = 2 + static_cast<int>(rng.index(199));
      const auto inst = random_dyadic_homogeneous(complete_graph(n), rng);
      const auto report = simple_sort(inst);
      if (report.status != SolveStatus::psne || !is_psne(inst, *report.profile)) ++bad;
    }
    return count_detail(1000, bad, "instances");
  });

  // 4. Welfare-optimal equilibrium matches enumeration exactly.
  criterion(4, "socially optimal welfare equals oracle optimum", [&] {
    int bad = 0;
    for (const auto& inst : homogeneous_pool) {
      const auto truth = best_psne_welfare(inst);
      const auto report = socially_optimal_complete(inst);
      if (truth.has_value() != (report.status == SolveStatus::psne)) {
        ++bad;
        continue;
      }
      if (truth && social_welfare(inst, *report.profile) != truth->second) ++bad;
    }
    return count_detail(500, bad, "instances");
  });

  // 5. Tree solver equivalence plus a large-scale runtime bound.
  criterion(5, "tree solver oracle equivalence and scale", [] {
    Rng rng(5005);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const int n = 2 + static_cast<int>(rng.index(11));
      const auto inst = random_dyadic_instance(random_tree_graph(n, rng), rng);
      const auto truth = enumerate_psne(inst);
      const auto report = solve_tree(inst);
      if ((report.status == SolveStatus::psne) != !truth.empty()) ++bad;
      if (report.status == SolveStatus::psne && !is_psne(inst, *report.profile)) ++bad;
    }

    std::string times;
    double last = 0.0;
    for (int n : {1000, 10000, 100000}) {
      GraphSpec spec;
      spec.kind = GraphKind::random_tree;
      spec.n = n;
      spec.seed = 42;
      const auto inst = gen_utilities(gen_graph(spec), {}, 77);
      const auto t0 = std::chrono::steady_clock::now();
      const auto report = solve_tree(inst);
      last = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (report.status == SolveStatus::psne && !is_psne(inst, *report.profile)) ++bad;
      times += " n=" + std::to_string(n) + ":" + std::to_string(last).substr(0, 5) + "s";
    }
    if (last >= 5.0) ++bad;
    return count_detail(503, bad, "checks") + ";" + times;
  });

  // 6. Convex fully-homogeneous games: investing sets live in the core.
  criterion(6, "k-core characterization", [] {
    Rng rng(6006);
    int bad = 0;
    int extremes = 0;
    int nontrivial = 0;
    for (int i = 0; i < 500; ++i) {
      const int n = 2 + static_cast<int>(rng.index(11));
      const Graph g = random_graph(n, 0.45, rng);
      const auto inst = random_dyadic_convex(g, rng);
      const auto th = threshold_k(inst);
      const auto result = solve_fully_homogeneous_convex(inst);
      const auto psne = enumerate_psne(inst);

      for (const auto& x : result.inventory)
        if (!is_psne(inst, x)) ++bad;

      if (th.kind != CoreThreshold::Kind::threshold) {
        ++extremes;
        if (psne.size() != 1 || psne.front() != *result.report.profile) ++bad;
        continue;
      }
      const auto core = k_core(g, th.k);
      std::vector<char> in_core(static_cast<std::size_t>(n), 0);
      for (int v : core) in_core[static_cast<std::size_t>(v)] = 1;
      for (const auto& x : psne) {
        const int k = invest_count(x);
        if (k == 0 || k == n) continue;
        ++nontrivial;
        for (int p = 0; p < n; ++p) {
          if (!x[static_cast<std::size_t>(p)]) continue;
          int deg = 0;
          for (int q : g.neighbors(p)) deg += x[static_cast<std::size_t>(q)];
          if (deg < th.k || !in_core[static_cast<std::size_t>(p)]) ++bad;
        }
      }
    }
    return count_detail(500, bad, "instances") + "; " + std::to_string(extremes) +
           " extreme, " + std::to_string(nontrivial) + " non-trivial equilibria";
  });

  // 7. Reduction gadgets versus brute force on every small base graph.
  criterion(7, "reduction gadgets match brute force", [] {
    std::vector<Graph> bases;
    for (int n = 1; n <= 4; ++n)
      for (auto& g : all_graphs_on(n)) bases.push_back(std::move(g));
    Rng rng(7007);
    for (int i = 0; i < 50; ++i) bases.push_back(random_graph(5, 0.5, rng));

    int checked = 0;
    int bad = 0;
    for (const auto& base : bases) {
      for (int k = 1; k <= base.size() + 1; ++k) {
        ++checked;
        const bool psne = !enumerate_psne(independent_set_gadget(base, k)).empty();
        if (psne != has_independent_set(base, k)) ++bad;
      }
      ++checked;
      bool nontrivial = false;
      for (const auto& p : enumerate_psne(three_ris_gadget(base))) {
        const int k = invest_count(p);
        nontrivial = nontrivial || (k > 0 && k < base.size());
      }
      if (nontrivial != has_proper_3ris(base)) ++bad;
    }
    return count_detail(checked, bad, "gadget checks");
  });

  // 8. Pure populations: best-response dynamics reach exact equilibria.
  criterion(8, "heuristic exactness at gamma 0 and 1", [] {
    int bad = 0;
    int runs = 0;
    for (const auto kind : {GraphKind::barabasi_albert, GraphKind::watts_strogatz}) {
      int exact = 0;
      for (int i = 0; i < 100; ++i) {
        GraphSpec spec;
        spec.kind = kind;
        spec.n = 500;
        spec.ba_edges = 3;
        spec.ws_degree = 4;
        spec.ws_rewire = 0.1;
        spec.seed = 8000 + static_cast<std::uint64_t>(i);
        UtilityFamilyParams up;
        up.gamma = i % 2 == 0 ? 0.0 : 1.0;
        const auto inst = gen_utilities(gen_graph(spec), up, 8100 + i);
        HeuristicParams params;
        params.seed = 8200 + static_cast<std::uint64_t>(i);
        const auto report = find_approx_psne(inst, params);
        ++runs;
        if (report.status == SolveStatus::psne && is_psne(inst, *report.profile))
          ++exact;
      }
      if (exact < 99) ++bad;
    }
    if (bad > 0) return "!" + std::to_string(bad) + " graph families below 99% exact";
    return std::to_string(runs) + " runs, >=99% exact per graph family";
  });

  // 9. Mixed populations: small normalized epsilon, plus a large edge-list
  //    smoke run.
  criterion(9, "heuristic quality at mixed gamma", [] {
    const double gammas[] = {0.2, 0.5, 0.8};
    int good = 0;
    const int runs = 200;
    double worst = 0.0;
    for (int i = 0; i < runs; ++i) {
      GraphSpec spec;
      spec.kind = GraphKind::barabasi_albert;
      spec.n = 500;
      spec.ba_edges = 3;
      spec.seed = 9000 + static_cast<std::uint64_t>(i);
      UtilityFamilyParams up;
      up.gamma = gammas[i % 3];
      const auto inst = gen_utilities(gen_graph(spec), up, 9100 + i);
      HeuristicParams params;
      params.seed = 9200 + static_cast<std::uint64_t>(i);
      const auto report = find_approx_psne(inst, params);
      const double eps =
          report.status == SolveStatus::psne ? 0.0 : report.epsilon;
      worst = std::max(worst, eps);
      good += eps <= 0.05;
    }

    // Edge-list ingestion at realistic social-network scale.
    TempFile snapshot("acceptance_snapshot.edges");
    {
      GraphSpec spec;
      spec.kind = GraphKind::barabasi_albert;
      spec.n = 4000;
      spec.ba_edges = 22;
      spec.seed = 424242;
      const Graph g = gen_graph(spec);
      std::ofstream out(snapshot.path);
      out << "# synthetic snapshot\n";
      for (const auto& [a, b] : g.edges()) out << a + 1 << " " << b + 1 << "\n";
    }
    const Graph loaded = load_edge_list(snapshot.path);
    UtilityFamilyParams up;
    up.gamma = 0.5;
    const auto big = gen_utilities(loaded, up, 31337);
    HeuristicParams params;
    params.seed = 31338;
    const auto smoke = find_approx_psne(big, params);

    std::string detail = std::to_string(good) + "/" + std::to_string(runs) +
                         " runs with normalized eps <= 0.05 (worst " +
                         format_double(worst) + "); smoke n=" +
                         std::to_string(loaded.size()) + " eps=" +
                         format_double(smoke.status == SolveStatus::psne ? 0.0
                                                                         : smoke.epsilon);
    if (good < static_cast<int>(0.95 * runs)) return "!" + detail;
    return detail;
  });

  // 10. Convex populations invest more as beta grows.
  criterion(10, "invest ratio rises with beta at gamma 1", [] {
    ExperimentConfig cfg;
    cfg.seed = 1010;
    cfg.replications = 50;
    GraphSpec g;
    g.kind = GraphKind::barabasi_albert;
    g.n = 200;
    g.ba_edges = 3;
    cfg.graphs = {g};
    cfg.gammas = {1.0};
    cfg.alpha_pools = {{0.1}, {0.3}, {0.5}, {0.7}, {0.9}};
    cfg.beta_pools = {{1.2}, {1.5}, {2.0}};
    cfg.method = Method::heuristic;
    cfg.timing = false;
    const auto result = run_experiment(cfg);

    std::vector<double> betas, means;
    std::size_t i = 0;
    while (i < result.rows.size()) {
      const auto cell = result.rows[i].cell;
      double mean = 0.0;
      int count = 0;
      for (; i < result.rows.size() && result.rows[i].cell == cell; ++i, ++count)
        mean += result.rows[i].invest_ratio;
      betas.push_back(result.rows[i - 1].beta_pool.front());
      means.push_back(mean / count);
    }
    const double rho = spearman(betas, means);
    std::string detail = "Spearman(beta, mean ratio) = " + format_double(rho) + " over " +
                         std::to_string(betas.size()) + " cells";
    if (!(rho > 0.0)) return "!" + detail;
    return detail;
  });

  // 11. Byte-identical reruns for solver reports and experiment CSVs.
  criterion(11, "deterministic outputs", [] {
    int bad = 0;

    TempFile game("acceptance_game.game");
    {
      GraphSpec spec;
      spec.kind = GraphKind::barabasi_albert;
      spec.n = 60;
      spec.ba_edges = 2;
      spec.seed = 11011;
      save_game(gen_utilities(gen_graph(spec), {}, 11012), game.path);
    }
    for (const std::string method : {"heuristic", "auto"}) {
      cli::SolveOptions opt;
      opt.game_path = game.path;
      opt.method = method;
      opt.heuristic.seed = 7;
      std::ostringstream out1, out2, err;
      if (cli::run_solve(opt, out1, err) == cli::kExitError) ++bad;
      if (cli::run_solve(opt, out2, err) == cli::kExitError) ++bad;
      if (out1.str() != out2.str() || out1.str().empty()) ++bad;
    }

    ExperimentConfig cfg;
    cfg.seed = 111;
    cfg.replications = 4;
    GraphSpec g;
    g.kind = GraphKind::watts_strogatz;
    g.n = 80;
    g.ws_degree = 4;
    g.ws_rewire = 0.2;
    cfg.graphs = {g};
    cfg.gammas = {0.0, 1.0};
    cfg.alpha_pools = {{0.5}};
    cfg.beta_pools = {{1.5}};
    cfg.timing = false;  // wall time is excluded from the guarantee
    cfg.threads = 1;
    const auto r1 = run_experiment(cfg);
    cfg.threads = 3;
    const auto r2 = run_experiment(cfg);
    std::ostringstream rows1, rows2, agg1, agg2;
    write_rows_csv(r1, rows1);
    write_rows_csv(r2, rows2);
    write_aggregate_csv(r1, agg1);
    write_aggregate_csv(r2, agg2);
    if (rows1.str() != rows2.str()) ++bad;
    if (agg1.str() != agg2.str()) ++bad;

    return count_detail(4, bad, "rerun comparisons");
  });

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAILURE" : "SUCCESS",
              failures);
  return failures;
}
