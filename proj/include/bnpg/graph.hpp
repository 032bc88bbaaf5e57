#pragma once

#include <utility>
#include <vector>

namespace bnpg {

/// Simple undirected loop-free graph over players 0..n-1.
/// Adjacency lists are kept sorted; the validating constructor rejects
/// self-loops and duplicate edges, `from_adjacency` takes data as given
/// (for loaders and for exercising validate()).
class Graph {
 public:
  Graph() = default;

  /// Build from an edge list (0-indexed endpoints). Throws
  /// std::invalid_argument on bad indices, self-loops, or duplicates.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  /// Adopt raw adjacency without checks.
  static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

  int size() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
  int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
  int max_degree() const;
  long long edge_count() const;
  bool has_edge(int i, int j) const;

  bool is_complete() const;
  bool is_connected() const;
  bool is_tree() const;

  /// Component id per node, numbered by first appearance (0-based).
  std::vector<int> component_labels() const;

  /// Edge list with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace bnpg
