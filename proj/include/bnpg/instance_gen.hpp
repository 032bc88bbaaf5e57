#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"

namespace bnpg {

enum class GraphKind {
  complete,
  path,
  star,
  cycle,
  random_tree,
  erdos_renyi,
  barabasi_albert,
  watts_strogatz,
};

std::string to_string(GraphKind kind);
/// Accepts canonical names plus the aliases "tree", "ba", "ws", "er".
std::optional<GraphKind> graph_kind_from_string(const std::string& s);

struct GraphSpec {
  GraphKind kind = GraphKind::complete;
  int n = 0;
  std::uint64_t seed = 0;
  int ba_edges = 3;        // edges per new node
  double ba_offset = 0.0;  // attachment kernel deg + offset; > -ba_edges.
                           // 0 gives the classic degree-3 power law; negative
                           // offsets push the fitted exponent below 3.
  int ws_degree = 4;       // even lattice degree
  double ws_rewire = 0.1;
  double er_prob = 0.05;
};

/// Deterministic per (kind, n, seed, params). Throws std::invalid_argument
/// on out-of-range parameters.
Graph gen_graph(const GraphSpec& spec);

/// Sampling pools for the utility families. `gamma` is the probability a
/// player draws the convex (complements) family; the rest draw the concave
/// (substitutes) family.
struct UtilityFamilyParams {
  double gamma = 0.5;
  std::vector<double> alpha_set = {0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> beta_set = {1.2, 1.5, 2.0};
  double lambda_min = 0.0;
  double lambda_max = 1.0;
};

/// Per player: cost ~ U[0,1], family coin, scale lambda ~ U[lambda range],
/// alpha and beta uniform from the pools; the table holds
/// lambda * h(0..deg+1) with h concave alpha*beta*log(t+1) or convex
/// alpha*((t+1)^beta - 1). Deterministic per seed.
BnpgInstance gen_utilities(const Graph& graph, const UtilityFamilyParams& params,
                           std::uint64_t seed);

/// Hardness-reduction fixture: base graph plus a hub adjacent to every
/// base node; the game has a PSNE iff the base graph has an independent
/// set of size >= k.
BnpgInstance independent_set_gadget(const Graph& base, int k);

/// Hardness-reduction fixture, fully homogeneous: non-trivial PSNE iff the
/// base graph has a proper non-empty subset inducing a 3-regular subgraph.
BnpgInstance three_ris_gadget(const Graph& base);

/// Whitespace-separated integer pairs, one edge per line, '#' comments.
/// Duplicates merged, direction ignored, self-loops rejected; node ids
/// compacted by first appearance. Ids must be >= 1 unless `zero_indexed`.
Graph load_edge_list(const std::string& path, bool zero_indexed = false,
                     bool largest_component = false);

}  // namespace bnpg
