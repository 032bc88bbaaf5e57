#include "bnpg/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bnpg/errors.hpp"
#include "bnpg/rng.hpp"

namespace bnpg {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::complete: return "complete";
    case GraphKind::path: return "path";
    case GraphKind::star: return "star";
    case GraphKind::cycle: return "cycle";
    case GraphKind::random_tree: return "random_tree";
    case GraphKind::erdos_renyi: return "erdos_renyi";
    case GraphKind::barabasi_albert: return "barabasi_albert";
    case GraphKind::watts_strogatz: return "watts_strogatz";
  }
  return "complete";
}

std::optional<GraphKind> graph_kind_from_string(const std::string& s) {
  if (s == "complete") return GraphKind::complete;
  if (s == "path") return GraphKind::path;
  if (s == "star") return GraphKind::star;
  if (s == "cycle") return GraphKind::cycle;
  if (s == "random_tree" || s == "tree") return GraphKind::random_tree;
  if (s == "erdos_renyi" || s == "er") return GraphKind::erdos_renyi;
  if (s == "barabasi_albert" || s == "ba") return GraphKind::barabasi_albert;
  if (s == "watts_strogatz" || s == "ws") return GraphKind::watts_strogatz;
  return std::nullopt;
}

namespace {

Graph gen_barabasi_albert(const GraphSpec& spec) {
  const int n = spec.n;
  const int m = spec.ba_edges;
  if (m < 1 || m >= n)
    throw std::invalid_argument("barabasi_albert needs 1 <= ba_edges < n");
  if (!(spec.ba_offset > -static_cast<double>(m)))
    throw std::invalid_argument("ba_offset must exceed -ba_edges");

  Rng rng(spec.seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);

  // Seed clique on m+1 nodes keeps every degree >= m, so the shifted
  // kernel deg + offset stays positive.
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
      ++deg[static_cast<std::size_t>(i)];
      ++deg[static_cast<std::size_t>(j)];
    }

  // Pure linear kernel can use the repeated-endpoint trick; a shifted one
  // needs explicit weights (O(n) per draw, desk-scale graphs only).
  std::vector<int> endpoints;
  if (spec.ba_offset == 0.0) {
    endpoints.reserve(static_cast<std::size_t>(2 * m * n));
    for (const auto& [a, b] : edges) {
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }

  std::vector<char> picked(static_cast<std::size_t>(n), 0);
  for (int v = m + 1; v < n; ++v) {
    std::vector<int> targets;
    targets.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      int t = -1;
      if (spec.ba_offset == 0.0) {
        do {
          t = endpoints[rng.index(endpoints.size())];
        } while (picked[static_cast<std::size_t>(t)]);
      } else {
        double total = 0.0;
        for (int w = 0; w < v; ++w)
          if (!picked[static_cast<std::size_t>(w)])
            total += deg[static_cast<std::size_t>(w)] + spec.ba_offset;
        double r = rng.uniform01() * total;
        for (int w = 0; w < v; ++w) {
          if (picked[static_cast<std::size_t>(w)]) continue;
          r -= deg[static_cast<std::size_t>(w)] + spec.ba_offset;
          if (r <= 0.0) {
            t = w;
            break;
          }
        }
        if (t < 0) {  // guard against accumulated rounding
          for (int w = v - 1; w >= 0; --w)
            if (!picked[static_cast<std::size_t>(w)]) {
              t = w;
              break;
            }
        }
      }
      picked[static_cast<std::size_t>(t)] = 1;
      targets.push_back(t);
    }
    for (int t : targets) {
      picked[static_cast<std::size_t>(t)] = 0;
      edges.emplace_back(v, t);
      ++deg[static_cast<std::size_t>(v)];
      ++deg[static_cast<std::size_t>(t)];
      if (spec.ba_offset == 0.0) {
        endpoints.push_back(v);
        endpoints.push_back(t);
      }
    }
  }
  return Graph(n, edges);
}

Graph gen_watts_strogatz(const GraphSpec& spec) {
  const int n = spec.n;
  const int k = spec.ws_degree;
  if (k < 2 || k % 2 != 0 || k >= n)
    throw std::invalid_argument("watts_strogatz needs even ws_degree with 2 <= ws_degree < n");
  if (spec.ws_rewire < 0.0 || spec.ws_rewire > 1.0)
    throw std::invalid_argument("ws_rewire must lie in [0,1]");

  Rng rng(spec.seed);
  std::set<std::pair<int, int>> edge_set;
  auto canon = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  auto add = [&](int a, int b) {
    edge_set.insert(canon(a, b));
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  };
  auto remove = [&](int a, int b) {
    edge_set.erase(canon(a, b));
    --deg[static_cast<std::size_t>(a)];
    --deg[static_cast<std::size_t>(b)];
  };

  for (int off = 1; off <= k / 2; ++off)
    for (int i = 0; i < n; ++i) add(i, (i + off) % n);

  for (int off = 1; off <= k / 2; ++off) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + off) % n;
      if (!edge_set.count(canon(i, j))) continue;  // already rewired away
      if (!rng.bernoulli(spec.ws_rewire)) continue;
      if (deg[static_cast<std::size_t>(i)] >= n - 1) continue;  // saturated
      int w;
      do {
        w = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      } while (w == i || edge_set.count(canon(i, w)));
      remove(i, j);
      add(i, w);
    }
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  return Graph(n, edges);
}

}  // namespace

Graph gen_graph(const GraphSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::invalid_argument("graph size must be positive");
  std::vector<std::pair<int, int>> edges;

  switch (spec.kind) {
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(n, edges);
    case GraphKind::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, edges);
    case GraphKind::star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      return Graph(n, edges);
    case GraphKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      // normalize (n-1, 0)
      edges.back() = {0, n - 1};
      return Graph(n, edges);
    case GraphKind::random_tree: {
      Rng rng(spec.seed);
      for (int i = 1; i < n; ++i)
        edges.emplace_back(static_cast<int>(rng.index(static_cast<std::size_t>(i))), i);
      return Graph(n, edges);
    }
    case GraphKind::erdos_renyi: {
      if (spec.er_prob < 0.0 || spec.er_prob > 1.0)
        throw std::invalid_argument("er_prob must lie in [0,1]");
      Rng rng(spec.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.bernoulli(spec.er_prob)) edges.emplace_back(i, j);
      return Graph(n, edges);
    }
    case GraphKind::barabasi_albert:
      return gen_barabasi_albert(spec);
    case GraphKind::watts_strogatz:
      return gen_watts_strogatz(spec);
  }
  throw std::invalid_argument("unknown graph kind");
}

BnpgInstance gen_utilities(const Graph& graph, const UtilityFamilyParams& params,
                           std::uint64_t seed) {
  if (params.gamma < 0.0 || params.gamma > 1.0)
    throw std::invalid_argument("gamma must lie in [0,1]");
  if (params.alpha_set.empty() || params.beta_set.empty())
    throw std::invalid_argument("alpha/beta pools must be non-empty");
  if (params.lambda_max < params.lambda_min)
    throw std::invalid_argument("lambda range is inverted");

  Rng rng(seed);
  const int n = graph.size();
  std::vector<double> costs(static_cast<std::size_t>(n));
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    // Fixed draw order per player: cost, family, lambda, alpha, beta.
    costs[static_cast<std::size_t>(i)] = rng.uniform01();
    const bool convex = rng.bernoulli(params.gamma);
    const double lambda = rng.uniform(params.lambda_min, params.lambda_max);
    const double alpha = params.alpha_set[rng.index(params.alpha_set.size())];
    const double beta = params.beta_set[rng.index(params.beta_set.size())];

    auto& values = tables[static_cast<std::size_t>(i)].values;
    values.resize(static_cast<std::size_t>(graph.degree(i)) + 2);
    for (std::size_t t = 0; t < values.size(); ++t) {
      const double arg = static_cast<double>(t) + 1.0;
      const double h = convex ? alpha * (std::pow(arg, beta) - 1.0)
                              : alpha * beta * std::log(arg);
      values[t] = lambda * h;
    }
  }
  return BnpgInstance(graph, std::move(costs), std::move(tables),
                      Homogeneity::heterogeneous);
}

BnpgInstance independent_set_gadget(const Graph& base, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int nb = base.size();
  const int n = nb + 1;
  const int hub = nb;

  auto edges = base.edges();
  for (int i = 0; i < nb; ++i) edges.emplace_back(i, hub);
  Graph graph(n, edges);

  std::vector<double> costs(static_cast<std::size_t>(n), 0.5);
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < nb; ++i) {
    auto& v = tables[static_cast<std::size_t>(i)].values;
    v.assign(static_cast<std::size_t>(graph.degree(i)) + 2, 1.0);
    v[0] = 0.0;
  }
  auto& hv = tables[static_cast<std::size_t>(hub)].values;
  hv.assign(static_cast<std::size_t>(nb) + 2, 0.0);
  if (k > 1) {
    // Hub wants in exactly while the investing-neighbor count is in
    // (0, k). For k = 1 that band is empty and the piecewise form above
    // k would leave a spurious step at 2; the intended hub policy is
    // "never invest", which the all-zero table realizes.
    for (std::size_t t = 2; t < hv.size(); ++t)
      hv[t] = static_cast<double>(std::min<std::size_t>(t, static_cast<std::size_t>(k)));
  }
  return BnpgInstance(std::move(graph), std::move(costs), std::move(tables),
                      Homogeneity::heterogeneous);
}

BnpgInstance three_ris_gadget(const Graph& base) {
  const int n = base.size();
  std::vector<double> costs(static_cast<std::size_t>(n), 2.0);
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& v = tables[static_cast<std::size_t>(i)].values;
    v.resize(static_cast<std::size_t>(base.degree(i)) + 2);
    for (std::size_t t = 0; t < v.size(); ++t)
      v[t] = t <= 3 ? static_cast<double>(t) : static_cast<double>(t) + 1.0;
  }
  return BnpgInstance(base, std::move(costs), std::move(tables),
                      Homogeneity::fully_homogeneous);
}

Graph load_edge_list(const std::string& path, bool zero_indexed, bool largest_component) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list: " + path);

  std::unordered_map<long long, int> id_map;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<long long> seen;
  const long long min_id = zero_indexed ? 0 : 1;

  auto intern = [&](long long raw) {
    auto it = id_map.find(raw);
    if (it == id_map.end())
      it = id_map.emplace(raw, static_cast<int>(id_map.size())).first;
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream iss(line);
    long long a = 0, b = 0;
    if (!(iss >> a >> b))
      throw ParseError("expected two integers", line_no);
    std::string extra;
    if (iss >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
    if (a < min_id || b < min_id)
      throw ParseError("node id below " + std::to_string(min_id), line_no);
    if (a == b) throw ParseError("self-loop on node " + std::to_string(a), line_no);
    const int u = intern(a);
    const int v = intern(b);
    const long long key =
        static_cast<long long>(std::min(u, v)) * (1LL << 31) + std::max(u, v);
    if (seen.insert(key).second) edges.emplace_back(u, v);
  }
  if (id_map.empty()) throw ParseError("edge list is empty");

  Graph graph(static_cast<int>(id_map.size()), edges);
  if (!largest_component) return graph;

  const auto label = graph.component_labels();
  const int comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> size(static_cast<std::size_t>(comps), 0);
  for (int c : label) ++size[static_cast<std::size_t>(c)];
  // Largest component; component ids follow first appearance, so ties keep
  // the earlier one.
  const int keep = static_cast<int>(
      std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<int> remap(label.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == keep) remap[i] = next++;
  std::vector<std::pair<int, int>> kept;
  for (const auto& [u, v] : edges)
    if (label[static_cast<std::size_t>(u)] == keep)
      kept.emplace_back(remap[static_cast<std::size_t>(u)], remap[static_cast<std::size_t>(v)]);
  return Graph(next, kept);
}

}  // namespace bnpg
