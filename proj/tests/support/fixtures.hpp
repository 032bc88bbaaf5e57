#pragma once

// Shared fixtures and independent brute-force oracles for the test suites.
// Everything here is deliberately separate from the library's solver paths:
// expected values are produced by enumeration or directly from hand-checked
// tables, never by the code under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"
#include "bnpg/rng.hpp"

namespace bnpg::test {

inline BnpgInstance make_instance(const Graph& g, std::vector<double> costs,
                                  std::vector<std::vector<double>> tables,
                                  Homogeneity tag = Homogeneity::heterogeneous) {
  std::vector<ExternalityTable> ext;
  ext.reserve(tables.size());
  for (auto& t : tables) ext.push_back(ExternalityTable{std::move(t)});
  return BnpgInstance(g, std::move(costs), std::move(ext), tag);
}

/// Three players on a path (player 2 in the middle), c = (1, 2, 3),
/// shared g = (4.5, 6, 9.5, 10) truncated per degree. No PSNE exists.
inline BnpgInstance path_game() {
  Graph g(3, {{0, 1}, {1, 2}});
  return make_instance(g, {1.0, 2.0, 3.0},
                       {{4.5, 6.0, 9.5}, {4.5, 6.0, 9.5, 10.0}, {4.5, 6.0, 9.5}},
                       Homogeneity::homogeneous);
}

/// Two players on an edge with crossing preferences; no PSNE for any
/// eps <= min(c_a, c_b). Default instantiation: c=1, eps=0.5.
inline BnpgInstance two_player_game(double c_a = 1.0, double c_b = 1.0,
                                    double eps = 0.5) {
  Graph g(2, {{0, 1}});
  return make_instance(g, {c_a, c_b},
                       {{eps, c_a, 2 * c_a + eps}, {eps, c_b + 2 * eps, 2 * c_b + eps}});
}

/// Fully homogeneous 4-cycle, g = (0, 1, 3, 7), c = 2.
inline BnpgInstance c4_game() {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  return make_instance(g, {2.0, 2.0, 2.0, 2.0},
                       {{0, 1, 3, 7}, {0, 1, 3, 7}, {0, 1, 3, 7}, {0, 1, 3, 7}},
                       Homogeneity::fully_homogeneous);
}

inline BnpgInstance single_player_game(double g0, double g1, double c) {
  Graph g = Graph::from_adjacency({{}});
  return make_instance(g, {c}, {{g0, g1}});
}

/// Homogeneous K3 with difference curve (0.4, 0.6, 0.2), c = (0.1, 0.5, 0.9).
inline BnpgInstance k3_family_game() {
  Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
  std::vector<double> tab = {0.0, 0.4, 1.0, 1.2};
  return make_instance(g, {0.1, 0.5, 0.9}, {tab, tab, tab}, Homogeneity::homogeneous);
}

// --- random instance generators (dyadic values, exact in doubles) --------

inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_tree_graph(int n, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i)
    edges.emplace_back(static_cast<int>(rng.index(static_cast<std::size_t>(i))), i);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline double dyadic(Rng& rng, int steps, double unit = 0.25) {
  return unit * static_cast<double>(rng.index(static_cast<std::size_t>(steps)));
}

/// Heterogeneous instance on `g` with costs and table increments on a
/// 0.25 grid, so indifference ties occur and arithmetic is exact.
inline BnpgInstance random_dyadic_instance(const Graph& g, Rng& rng) {
  const int n = g.size();
  std::vector<double> costs(static_cast<std::size_t>(n));
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    costs[static_cast<std::size_t>(i)] = dyadic(rng, 9);  // 0 .. 2
    auto& v = tables[static_cast<std::size_t>(i)].values;
    double acc = dyadic(rng, 5);
    v.push_back(acc);
    for (int t = 0; t <= g.degree(i); ++t) {
      acc += dyadic(rng, 6);  // increments 0 .. 1.25
      v.push_back(acc);
    }
  }
  return BnpgInstance(g, std::move(costs), std::move(tables));
}

/// Homogeneous instance (shared table, per-player dyadic costs).
inline BnpgInstance random_dyadic_homogeneous(const Graph& g, Rng& rng) {
  const int n = g.size();
  const int d_max = g.max_degree();
  std::vector<double> shared;
  double acc = dyadic(rng, 5);
  shared.push_back(acc);
  for (int t = 0; t <= d_max; ++t) {
    acc += dyadic(rng, 6);
    shared.push_back(acc);
  }
  std::vector<double> costs(static_cast<std::size_t>(n));
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    costs[static_cast<std::size_t>(i)] = dyadic(rng, 9);
    auto& v = tables[static_cast<std::size_t>(i)].values;
    v.assign(shared.begin(), shared.begin() + g.degree(i) + 2);
  }
  return BnpgInstance(g, std::move(costs), std::move(tables), Homogeneity::homogeneous);
}

/// Fully homogeneous with strictly increasing dyadic differences.
inline BnpgInstance random_dyadic_convex(const Graph& g, Rng& rng) {
  const int n = g.size();
  const int d_max = g.max_degree();
  std::vector<double> shared;
  double delta = dyadic(rng, 4);  // delta g(0) in 0 .. 0.75
  double acc = dyadic(rng, 5);
  shared.push_back(acc);
  for (int t = 0; t <= d_max; ++t) {
    acc += delta;
    shared.push_back(acc);
    delta += 0.25 * static_cast<double>(1 + rng.index(3));  // strictly up
  }
  const double cost = dyadic(rng, 13);  // 0 .. 3: hits both extremes
  std::vector<double> costs(static_cast<std::size_t>(n), cost);
  std::vector<ExternalityTable> tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    tables[static_cast<std::size_t>(i)].values.assign(shared.begin(),
                                                      shared.begin() + g.degree(i) + 2);
  return BnpgInstance(g, std::move(costs), std::move(tables),
                      Homogeneity::fully_homogeneous);
}

// --- independent brute-force oracles --------------------------------------

/// Every labeled graph on n nodes (all edge subsets); n <= 5 is sane.
inline std::vector<Graph> all_graphs_on(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask & (std::uint64_t{1} << b)) edges.push_back(pairs[b]);
    out.push_back(Graph(n, edges));
  }
  return out;
}

inline bool subset_independent(const Graph& g, std::uint32_t mask) {
  for (int i = 0; i < g.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    for (int j : g.neighbors(i))
      if (mask & (1u << j)) return false;
  }
  return true;
}

inline bool has_independent_set(const Graph& g, int k) {
  const std::uint32_t total = 1u << g.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) < k) continue;
    if (subset_independent(g, mask)) return true;
  }
  return false;
}

/// Proper non-empty subset inducing a 3-regular subgraph. (The whole
/// vertex set is excluded: it corresponds to the all-invest profile,
/// which is a trivial equilibrium by definition.)
inline bool has_proper_3ris(const Graph& g) {
  const std::uint32_t total = 1u << g.size();
  for (std::uint32_t mask = 1; mask + 1 < total; ++mask) {
    bool ok = true;
    bool any = false;
    for (int i = 0; i < g.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      any = true;
      int deg = 0;
      for (int j : g.neighbors(i)) deg += (mask & (1u << j)) != 0;
      ok = deg == 3;
    }
    if (ok && any) return true;
  }
  return false;
}

/// Fixed-point k-core: repeatedly drop nodes with induced degree < k.
inline std::vector<int> naive_k_core(const Graph& g, int k) {
  std::vector<char> alive(static_cast<std::size_t>(g.size()), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < g.size(); ++i) {
      if (!alive[static_cast<std::size_t>(i)]) continue;
      int deg = 0;
      for (int j : g.neighbors(i)) deg += alive[static_cast<std::size_t>(j)];
      if (deg < k) {
        alive[static_cast<std::size_t>(i)] = 0;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (alive[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace bnpg::test
