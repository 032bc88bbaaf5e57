#include "cli_commands.hpp"

#include <fstream>

#include "bnpg/errors.hpp"
#include "bnpg/game_io.hpp"
#include "bnpg/kcore_solver.hpp"
#include "bnpg/rng.hpp"

namespace bnpg::cli {

namespace {

int report_error(std::ostream& err, const std::string& what) {
  err << "error: " << what << "\n";
  return kExitError;
}

int report_validation(std::ostream& err, const ValidationError& e) {
  err << "error: game file is invalid:\n";
  for (const auto& v : e.violations) err << "  " << v << "\n";
  return kExitError;
}

void print_profile_lines(std::ostream& out, const BnpgInstance& inst,
                         const ActionProfile& x) {
  out << "profile: " << to_bitstring(x) << "\n";
  out << "invest_ratio: "
      << format_double(static_cast<double>(invest_count(x)) / inst.n()) << "\n";
  out << "social_welfare: " << format_double(social_welfare(inst, x)) << "\n";
}

}  // namespace

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto kind = graph_kind_from_string(opt.kind);
    if (!kind) return report_error(err, "unknown graph kind '" + opt.kind + "'");
    if (opt.out_path.empty()) return report_error(err, "missing output path");

    GraphSpec spec;
    spec.kind = *kind;
    spec.n = opt.n;
    spec.seed = derive_seed(opt.seed, 0);
    spec.ba_edges = opt.ba_edges;
    spec.ba_offset = opt.ba_offset;
    spec.ws_degree = opt.ws_degree;
    spec.ws_rewire = opt.ws_rewire;
    spec.er_prob = opt.er_prob;

    UtilityFamilyParams params;
    params.gamma = opt.gamma;
    if (!opt.alpha_set.empty()) params.alpha_set = opt.alpha_set;
    if (!opt.beta_set.empty()) params.beta_set = opt.beta_set;

    const Graph graph = gen_graph(spec);
    const BnpgInstance inst = gen_utilities(graph, params, derive_seed(opt.seed, 1));

    nlohmann::ordered_json prov;
    prov["generator"]["kind"] = to_string(spec.kind);
    prov["generator"]["n"] = spec.n;
    prov["generator"]["seed"] = opt.seed;
    prov["generator"]["gamma"] = params.gamma;
    prov["generator"]["alpha_set"] = params.alpha_set;
    prov["generator"]["beta_set"] = params.beta_set;
    switch (spec.kind) {
      case GraphKind::barabasi_albert:
        prov["generator"]["ba_edges"] = spec.ba_edges;
        prov["generator"]["ba_offset"] = spec.ba_offset;
        break;
      case GraphKind::watts_strogatz:
        prov["generator"]["ws_degree"] = spec.ws_degree;
        prov["generator"]["ws_rewire"] = spec.ws_rewire;
        break;
      case GraphKind::erdos_renyi:
        prov["generator"]["er_prob"] = spec.er_prob;
        break;
      default:
        break;
    }

    save_game(inst, opt.out_path, prov);
    out << "wrote " << opt.out_path << " (n=" << inst.n()
        << ", edges=" << inst.graph().edge_count() << ")\n";
    return kExitPsne;
  } catch (const std::exception& e) {
    return report_error(err, e.what());
  }
}

int run_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    load_game(opt.game_path);
    out << "valid\n";
    return 0;
  } catch (const ValidationError& e) {
    return report_validation(err, e);
  } catch (const std::exception& e) {
    return report_error(err, e.what());
  }
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto method = method_from_string(opt.method);
    if (!method) return report_error(err, "unknown method '" + opt.method + "'");
    const auto doc = load_game(opt.game_path);

    DispatchOptions options;
    options.heuristic = opt.heuristic;
    options.oracle_limit = opt.oracle_limit;
    options.allow_forest = opt.allow_forest;

    // kcore is the one solver with a richer result; surface its inventory.
    if (*method == Method::kcore ||
        (*method == Method::auto_dispatch &&
         resolve_method(doc.instance, opt.oracle_limit) == Method::kcore)) {
      const auto result = solve_fully_homogeneous_convex(doc.instance);
      out << "method: kcore\n";
      out << "status: " << to_string(result.report.status) << "\n";
      print_profile_lines(out, doc.instance, *result.report.profile);
      out << "psne_inventory:\n";
      for (const auto& x : result.inventory) out << "  " << to_bitstring(x) << "\n";
      return kExitPsne;
    }

    const SolveReport report = dispatch_solve(doc.instance, *method, options);
    out << "method: " << report.method << "\n";
    out << "status: " << to_string(report.status) << "\n";
    switch (report.status) {
      case SolveStatus::psne:
        print_profile_lines(out, doc.instance, *report.profile);
        return kExitPsne;
      case SolveStatus::no_psne:
        return kExitNoPsne;
      case SolveStatus::approx_psne:
        out << "epsilon: " << format_double(report.epsilon) << " ("
            << (report.epsilon_normalized ? "normalized" : "unnormalized") << ")\n";
        print_profile_lines(out, doc.instance, *report.profile);
        return kExitApprox;
    }
    return kExitError;
  } catch (const ValidationError& e) {
    return report_validation(err, e);
  } catch (const std::exception& e) {
    return report_error(err, e.what());
  }
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto doc = load_game(opt.game_path);
    if (static_cast<int>(opt.profile_bits.size()) != doc.instance.n())
      return report_error(err, "profile length " +
                                   std::to_string(opt.profile_bits.size()) +
                                   " does not match n=" + std::to_string(doc.instance.n()));
    const ActionProfile x = profile_from_bits(opt.profile_bits);
    const bool psne = is_psne(doc.instance, x);
    out << "psne: " << (psne ? "yes" : "no") << "\n";
    out << "social_welfare: " << format_double(social_welfare(doc.instance, x)) << "\n";
    out << "max_epsilon: " << format_double(max_epsilon(doc.instance, x, false)) << "\n";
    out << "max_epsilon_normalized: "
        << format_double(max_epsilon(doc.instance, x, true)) << "\n";
    out << "deviation_gains:\n";
    for (int i = 0; i < doc.instance.n(); ++i)
      out << "  player " << (i + 1) << ": "
          << format_double(deviation_gain(doc.instance, x, i)) << "\n";
    return psne ? kExitPsne : kExitApprox;
  } catch (const ValidationError& e) {
    return report_validation(err, e);
  } catch (const std::exception& e) {
    return report_error(err, e.what());
  }
}

int run_experiment_cmd(const ExperimentOptions& opt, std::ostream& out,
                       std::ostream& err) {
  try {
    ExperimentConfig cfg = load_experiment_config(opt.config_path);
    if (!opt.rows_path.empty()) cfg.rows_path = opt.rows_path;
    if (!opt.aggregate_path.empty()) cfg.aggregate_path = opt.aggregate_path;
    if (opt.threads > 0) cfg.threads = opt.threads;
    if (opt.timing) cfg.timing = *opt.timing;
    if (cfg.rows_path.empty())
      return report_error(err, "no output path (config 'output' or --out)");

    const ExperimentResult result = run_experiment(cfg);

    std::ofstream rows(cfg.rows_path);
    if (!rows) return report_error(err, "cannot write " + cfg.rows_path);
    write_rows_csv(result, rows);
    out << "wrote " << cfg.rows_path << " (" << result.rows.size() << " rows)\n";

    if (!cfg.aggregate_path.empty()) {
      std::ofstream agg(cfg.aggregate_path);
      if (!agg) return report_error(err, "cannot write " + cfg.aggregate_path);
      write_aggregate_csv(result, agg);
      out << "wrote " << cfg.aggregate_path << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return report_error(err, e.what());
  }
}

}  // namespace bnpg::cli
