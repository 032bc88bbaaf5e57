#include "bnpg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bnpg {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0) throw std::invalid_argument("player count must be positive");
  adjacency_.assign(n, {});
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(a + 1) + "," +
                                  std::to_string(b + 1) + ")");
    if (a == b)
      throw std::invalid_argument("self-loop at player " + std::to_string(a + 1));
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    auto& nbrs = adjacency_[i];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("duplicate edge at player " + std::to_string(i + 1));
  }
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
  Graph g;
  g.adjacency_ = std::move(adjacency);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (const auto& nbrs : adjacency_) total += static_cast<long long>(nbrs.size());
  return total / 2;
}

bool Graph::has_edge(int i, int j) const {
  const auto& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool Graph::is_complete() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    if (degree(i) != n - 1) return false;
  return true;
}

std::vector<int> Graph::component_labels() const {
  const int n = size();
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adjacency_[v]) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool Graph::is_connected() const {
  if (size() == 0) return false;
  auto label = component_labels();
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

bool Graph::is_tree() const {
  return is_connected() && edge_count() == size() - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j : adjacency_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

}  // namespace bnpg
