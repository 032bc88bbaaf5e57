#pragma once

#include <vector>

#include "bnpg/game.hpp"

namespace bnpg {

/// Verdict for "is there a PSNE with exactly k investors" on a complete
/// graph. `unique` carries the full investing set (homogeneous case with
/// strictly increasing differences at k); `family` carries the witness
/// sets: forced investors, indifferent players, and how many of the latter
/// are needed to reach k.
struct KPsneClassification {
  enum class Status { none, unique, family };

  int k = 0;
  Status status = Status::none;
  std::vector<int> investors;     // unique
  std::vector<int> forced;        // family: I+(k)
  std::vector<int> indifferent;   // family: T
  int required_from_indifferent = 0;
};

/// I+(k) = players with c_i < delta g_i(k): invest in any k-PSNE.
std::vector<int> iplus(const BnpgInstance& inst, int k);

/// I-(k) = players with c_i > delta g_i(k-1): never invest in a k-PSNE.
std::vector<int> iminus(const BnpgInstance& inst, int k);

KPsneClassification classify_k_psne(const BnpgInstance& inst, int k);

/// Exact PSNE search on a complete graph: trivial profiles first, then the
/// k = 1..n-1 sweep. O(n^2). Works for heterogeneous instances.
SolveReport solve_complete(const BnpgInstance& inst);

/// O(n log n) constructive PSNE for homogeneous complete-graph games; the
/// cheapest players invest. Always succeeds on its domain.
SolveReport simple_sort(const BnpgInstance& inst);

/// Welfare-maximal PSNE for homogeneous complete-graph games (smallest k
/// wins ties).
SolveReport socially_optimal_complete(const BnpgInstance& inst);

}  // namespace bnpg
