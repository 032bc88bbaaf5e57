#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bnpg/game.hpp"

namespace bnpg {

/// Rooted orientation of a tree (or forest): parent links, children lists
/// ordered by index, and a preorder listing parents before children.
struct TreeDecomposition {
  std::vector<int> roots;                  // one per component, ascending
  std::vector<int> parent;                 // -1 for roots
  std::vector<std::vector<int>> children;  // ascending per node
  std::vector<int> preorder;
};

/// Deterministic decomposition: root is the smallest player of each
/// component (player 1 for a connected tree), children visited in index
/// order. Throws NotATree on a cycle, or on disconnected input unless
/// `allow_forest`.
TreeDecomposition root_and_order(const Graph& graph, bool allow_forest = false);

/// Per-node record of which (parent action, own action) pairs can be part
/// of a PSNE, each with one witness: the smallest feasible number of
/// investing children.
struct ConditionalBestResponseTable {
  std::array<std::array<std::optional<int>, 2>, 2> witness{};  // [parent][own]

  bool offers(int parent_action, int own_action) const {
    return witness[static_cast<std::size_t>(parent_action)]
                  [static_cast<std::size_t>(own_action)]
        .has_value();
  }
  bool empty() const {
    return !offers(0, 0) && !offers(0, 1) && !offers(1, 0) && !offers(1, 1);
  }
};

struct DownstreamTables {
  std::vector<ConditionalBestResponseTable> node;  // root entries unused
  /// Per root (parallel to decomposition.roots): witness per root action.
  std::vector<std::array<std::optional<int>, 2>> root;
};

/// Leaf-to-root pass. Returns nullopt when some node admits no action
/// compatible with any parent action (no PSNE exists).
std::optional<DownstreamTables> downstream_pass(const BnpgInstance& inst,
                                                const TreeDecomposition& decomp);

/// Root-to-leaf materialization of a PSNE from the tables. Roots prefer
/// action 0 when both are feasible. Throws std::logic_error if a required
/// table entry is missing (implementation bug, not a game property).
ActionProfile upstream_pass(const BnpgInstance& inst, const TreeDecomposition& decomp,
                            const DownstreamTables& tables);

/// Both passes; O(max_degree * V + E).
SolveReport solve_tree(const BnpgInstance& inst, bool allow_forest = false);

}  // namespace bnpg
