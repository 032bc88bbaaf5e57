#include "bnpg/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bnpg/errors.hpp"
#include "bnpg/rng.hpp"

namespace bnpg {

namespace {

using ordered_json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

GraphSpec graph_spec_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("each graph spec needs a string 'kind'");
  GraphSpec spec;
  const auto kind = graph_kind_from_string(j["kind"].get<std::string>());
  if (!kind) throw ParseError("unknown graph kind '" + j["kind"].get<std::string>() + "'");
  spec.kind = *kind;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("each graph spec needs an integer 'n'");
  spec.n = j["n"].get<int>();
  if (j.contains("ba_edges")) spec.ba_edges = j["ba_edges"].get<int>();
  if (j.contains("ba_offset")) spec.ba_offset = j["ba_offset"].get<double>();
  if (j.contains("ws_degree")) spec.ws_degree = j["ws_degree"].get<int>();
  if (j.contains("ws_rewire")) spec.ws_rewire = j["ws_rewire"].get<double>();
  if (j.contains("er_prob")) spec.er_prob = j["er_prob"].get<double>();
  return spec;
}

std::vector<std::vector<double>> pools_from_json(const ordered_json& j,
                                                 const std::string& name) {
  std::vector<std::vector<double>> pools;
  if (!j.is_array() || j.empty())
    throw ParseError("'" + name + "' must be a non-empty array");
  // Accept either a single pool ([0.1, 0.3]) or a list of pools.
  if (j.front().is_number()) {
    pools.push_back(j.get<std::vector<double>>());
  } else {
    for (const auto& pool : j) pools.push_back(pool.get<std::vector<double>>());
  }
  for (const auto& pool : pools)
    if (pool.empty()) throw std::invalid_argument("empty " + name + " pool");
  return pools;
}

void check_config(const ExperimentConfig& cfg) {
  if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (cfg.graphs.empty()) throw std::invalid_argument("graph grid is empty");
  if (cfg.gammas.empty()) throw std::invalid_argument("gamma grid is empty");
  if (cfg.alpha_pools.empty() || cfg.beta_pools.empty())
    throw std::invalid_argument("alpha/beta grids are empty");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
  for (double g : cfg.gammas)
    if (g < 0.0 || g > 1.0) throw std::invalid_argument("gamma must lie in [0,1]");
}

std::string graph_params_string(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphKind::barabasi_albert:
      return "m=" + format_double(spec.ba_edges) +
             (spec.ba_offset != 0.0 ? ";offset=" + format_double(spec.ba_offset) : "");
    case GraphKind::watts_strogatz:
      return "degree=" + std::to_string(spec.ws_degree) +
             ";rewire=" + format_double(spec.ws_rewire);
    case GraphKind::erdos_renyi:
      return "p=" + format_double(spec.er_prob);
    default:
      return "";
  }
}

std::string join_pool(const std::vector<double>& pool) {
  std::string out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i) out += ';';
    out += format_double(pool[i]);
  }
  return out;
}

struct Stats {
  int count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    if (std::isnan(v)) return;
    ++count;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return count ? sum / count : kNaN; }
  double sd() const {
    if (count < 2) return count == 1 ? 0.0 : kNaN;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(count) * m * m) /
                       static_cast<double>(count - 1);
    return std::sqrt(std::max(var, 0.0));
  }
};

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ExperimentConfig experiment_config_from_string(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  ExperimentConfig cfg;
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("replications")) cfg.replications = j["replications"].get<int>();
  if (!j.contains("graphs") || !j["graphs"].is_array())
    throw ParseError("config needs a 'graphs' array");
  for (const auto& g : j["graphs"]) cfg.graphs.push_back(graph_spec_from_json(g));
  if (!j.contains("gammas") || !j["gammas"].is_array())
    throw ParseError("config needs a 'gammas' array");
  cfg.gammas = j["gammas"].get<std::vector<double>>();
  if (j.contains("alpha_pools")) cfg.alpha_pools = pools_from_json(j["alpha_pools"], "alpha_pools");
  if (j.contains("beta_pools")) cfg.beta_pools = pools_from_json(j["beta_pools"], "beta_pools");
  if (j.contains("method")) {
    const auto m = method_from_string(j["method"].get<std::string>());
    if (!m) throw ParseError("unknown method '" + j["method"].get<std::string>() + "'");
    cfg.method = *m;
  }
  if (j.contains("heuristic")) {
    const auto& h = j["heuristic"];
    if (h.contains("K")) cfg.heuristic.K = h["K"].get<int>();
    if (h.contains("B")) cfg.heuristic.B = h["B"].get<int>();
    if (h.contains("delta")) cfg.heuristic.delta = h["delta"].get<double>();
    if (h.contains("p")) cfg.heuristic.p = h["p"].get<double>();
    if (h.contains("normalized")) cfg.heuristic.normalized = h["normalized"].get<bool>();
  }
  if (j.contains("oracle_limit")) cfg.oracle_limit = j["oracle_limit"].get<int>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("timing")) cfg.timing = j["timing"].get<bool>();
  if (j.contains("output")) cfg.rows_path = j["output"].get<std::string>();
  if (j.contains("aggregate_output")) cfg.aggregate_path = j["aggregate_output"].get<std::string>();

  check_config(cfg);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return experiment_config_from_string(buf.str());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  check_config(config);

  ExperimentResult result;
  result.config = config;

  // Lay out all rows first; workers fill them in by index.
  std::int64_t cell = 0;
  std::int64_t rid = 0;
  for (const auto& gspec : config.graphs) {
    for (double gamma : config.gammas) {
      for (const auto& ap : config.alpha_pools) {
        for (const auto& bp : config.beta_pools) {
          for (int rep = 0; rep < config.replications; ++rep) {
            ExperimentRow row;
            row.row = rid;
            row.cell = cell;
            row.seed = derive_seed(config.seed, static_cast<std::uint64_t>(rid));
            row.graph = gspec;
            row.gamma = gamma;
            row.alpha_pool = ap;
            row.beta_pool = bp;
            result.rows.push_back(std::move(row));
            ++rid;
          }
          ++cell;
        }
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= result.rows.size()) return;
      auto& row = result.rows[i];

      row.graph.seed = derive_seed(row.seed, 0);
      const Graph graph = gen_graph(row.graph);
      UtilityFamilyParams up;
      up.gamma = row.gamma;
      up.alpha_set = row.alpha_pool;
      up.beta_set = row.beta_pool;
      const BnpgInstance inst = gen_utilities(graph, up, derive_seed(row.seed, 1));

      DispatchOptions opts;
      opts.heuristic = config.heuristic;
      opts.heuristic.seed = derive_seed(row.seed, 2);
      opts.oracle_limit = config.oracle_limit;

      const auto t0 = std::chrono::steady_clock::now();
      const SolveReport report = dispatch_solve(inst, config.method, opts);
      const auto t1 = std::chrono::steady_clock::now();

      row.method = report.method;
      row.status = report.status;
      row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (report.profile) {
        row.epsilon = report.status == SolveStatus::approx_psne ? report.epsilon : 0.0;
        row.invest_ratio =
            static_cast<double>(invest_count(*report.profile)) / inst.n();
        row.social_welfare = social_welfare(inst, *report.profile);
      } else {
        row.epsilon = kNaN;
        row.invest_ratio = kNaN;
        row.social_welfare = kNaN;
      }
    }
  };

  if (config.threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return result;
}

void write_rows_csv(const ExperimentResult& result, std::ostream& out) {
  out << "row,seed,graph,n,graph_params,gamma,alpha_pool,beta_pool,method,status,"
         "epsilon,invest_ratio,social_welfare,wall_ms\n";
  for (const auto& r : result.rows) {
    out << r.row << ',' << r.seed << ',' << to_string(r.graph.kind) << ',' << r.graph.n
        << ',' << graph_params_string(r.graph) << ',' << format_double(r.gamma) << ','
        << join_pool(r.alpha_pool) << ',' << join_pool(r.beta_pool) << ',' << r.method
        << ',' << to_string(r.status) << ',' << format_double(r.epsilon) << ','
        << format_double(r.invest_ratio) << ',' << format_double(r.social_welfare) << ','
        << (result.config.timing ? format_double(r.wall_ms) : "") << '\n';
  }
}

void write_aggregate_csv(const ExperimentResult& result, std::ostream& out) {
  out << "graph,n,graph_params,gamma,alpha_pool,beta_pool,method,replications,"
         "psne_rate,epsilon_mean,epsilon_sd,invest_ratio_mean,invest_ratio_sd,"
         "social_welfare_mean,social_welfare_sd,wall_ms_mean\n";
  std::size_t i = 0;
  while (i < result.rows.size()) {
    const std::int64_t cell = result.rows[i].cell;
    Stats eps, ratio, sw, wall;
    int count = 0;
    int psne = 0;
    const auto& first = result.rows[i];
    for (; i < result.rows.size() && result.rows[i].cell == cell; ++i) {
      const auto& r = result.rows[i];
      ++count;
      psne += r.status == SolveStatus::psne;
      eps.add(r.epsilon);
      ratio.add(r.invest_ratio);
      sw.add(r.social_welfare);
      wall.add(r.wall_ms);
    }
    out << to_string(first.graph.kind) << ',' << first.graph.n << ','
        << graph_params_string(first.graph) << ',' << format_double(first.gamma) << ','
        << join_pool(first.alpha_pool) << ',' << join_pool(first.beta_pool) << ','
        << to_string(result.config.method) << ',' << count << ','
        << format_double(static_cast<double>(psne) / count) << ','
        << format_double(eps.mean()) << ',' << format_double(eps.sd()) << ','
        << format_double(ratio.mean()) << ',' << format_double(ratio.sd()) << ','
        << format_double(sw.mean()) << ',' << format_double(sw.sd()) << ','
        << (result.config.timing ? format_double(wall.mean()) : "") << '\n';
  }
}

}  // namespace bnpg
