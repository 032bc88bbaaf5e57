#pragma once

#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"

namespace bnpg {

/// Where the shared cost sits relative to the difference curve: below
/// delta g(0) (everyone invests), above delta g(d_max) (nobody invests),
/// or the generalized inverse k = min{t : delta g(t) >= c}.
struct CoreThreshold {
  enum class Kind { all_invest, none_invest, threshold };
  Kind kind = Kind::threshold;
  int k = 0;  // meaningful for Kind::threshold
};

/// True iff the shared difference curve is strictly increasing on
/// 0..d_max. Throws NotHomogeneous unless the instance is fully
/// homogeneous.
bool check_strict_convexity(const BnpgInstance& inst);

/// Threshold classification; requires fully homogeneous, strictly convex.
CoreThreshold threshold_k(const BnpgInstance& inst);

/// Maximal induced subgraph with minimum degree >= k (possibly empty or
/// disconnected); worklist pruning, O(V + E). Returns member nodes
/// ascending.
std::vector<int> k_core(const Graph& graph, int k);

struct KcoreSolveResult {
  /// Carries the non-trivial PSNE when the core construction yields one,
  /// otherwise the first inventoried trivial PSNE.
  SolveReport report;
  /// Every PSNE this solver certifies, in the order discovered.
  std::vector<ActionProfile> inventory;
};

/// Full classification for fully homogeneous games with strictly convex
/// externality: trivial extremes, plus the core-invests profile at
/// k = threshold when the maximal k-core is a proper non-empty subset.
KcoreSolveResult solve_fully_homogeneous_convex(const BnpgInstance& inst);

}  // namespace bnpg
